//! Order-preserving map over a slice, parallel when the `parallel` feature
//! is on and the caller asks for it.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// True when this build can actually run work on a thread pool.
pub const fn available() -> bool {
    cfg!(feature = "parallel")
}

/// Maps `f` over `items`, keeping input order in the output.
pub fn map<T, R, F>(items: &[T], parallel: bool, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if parallel {
            return items.par_iter().map(f).collect();
        }
    }
    let _ = parallel;
    items.iter().map(f).collect()
}
