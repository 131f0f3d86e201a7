//! Content-addressed result files. A file name is the SHA-256 of the key
//! text; the key text is stored again inside so a mismatch or a parse
//! failure just means a miss.

use pathdepth::monomial::text::format_ideal;
use pathdepth::sdepth::{build_poset, verify_partition, Mode, SdepthResult};
use pathdepth::verify::{Direct, Oracle};
use pathdepth::{Error, MonomialIdeal, Result};
use serde::{de::DeserializeOwned, Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

#[derive(Serialize, Deserialize)]
struct Entry<T> {
    key: String,
    value: T,
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn open(dir: &Path) -> std::io::Result<Cache> {
        fs::create_dir_all(dir)?;
        Ok(Cache { dir: dir.to_path_buf() })
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{}.json", hex::encode(Sha256::digest(key.as_bytes()))))
    }

    pub fn get<T: DeserializeOwned>(&self, key: &str) -> Option<T> {
        let bytes = fs::read(self.path(key)).ok()?;
        let e: Entry<T> = serde_json::from_slice(&bytes).ok()?;
        (e.key == key).then_some(e.value)
    }

    /// Write-then-rename, so readers never see half a file. Failures are
    /// ignored; the cache is an optimisation.
    pub fn put<T: Serialize>(&self, key: &str, value: &T) {
        let path = self.path(key);
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        let write = || -> std::io::Result<()> {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(&serde_json::to_vec(&Entry { key: key.to_string(), value })?)?;
            f.sync_all()?;
            fs::rename(&tmp, &path)
        };
        if write().is_err() {
            let _ = fs::remove_file(&tmp);
        }
    }
}

/// [`Direct`] behind a cache. Errors are never stored.
pub struct Cached {
    pub inner: Direct,
    pub cache: Option<Cache>,
    pub paranoid: bool,
}

impl Cached {
    fn pd_key(&self, ideal: &MonomialIdeal) -> String {
        format!("v1\npd\nfield={}\n{}", self.inner.betti.field, format_ideal(ideal))
    }

    fn sdepth_key(&self, ideal: &MonomialIdeal, mode: Mode) -> String {
        let g = self.inner.sdepth.g_override.as_ref().map(|g| g.to_string()).unwrap_or_default();
        format!(
            "v1\nsdepth\nmode={mode}\ng={g}\nengine={:?}\n{}",
            self.inner.sdepth.engine,
            format_ideal(ideal)
        )
    }

    fn still_valid(&self, ideal: &MonomialIdeal, mode: Mode, r: &SdepthResult) -> bool {
        let Ok(p) = build_poset(ideal, None, mode, Some(&r.certificate.g), self.inner.sdepth.max_poset) else {
            return false;
        };
        r.certificate.mode == mode && r.certificate.claimed_min_rho == r.value && verify_partition(&p, &r.certificate, r.value).accepted()
    }
}

impl Oracle for Cached {
    fn pd_quotient(&self, ideal: &MonomialIdeal) -> Result<usize> {
        let key = self.pd_key(ideal);
        if let Some(pd) = self.cache.as_ref().and_then(|c| c.get::<usize>(&key)) {
            return Ok(pd);
        }
        let pd = self.inner.pd_quotient(ideal)?;
        if let Some(c) = &self.cache {
            c.put(&key, &pd);
        }
        Ok(pd)
    }

    fn sdepth(&self, ideal: &MonomialIdeal, mode: Mode, hint: Option<usize>) -> Result<SdepthResult> {
        let key = self.sdepth_key(ideal, mode);
        if let Some(r) = self.cache.as_ref().and_then(|c| c.get::<SdepthResult>(&key)) {
            if !self.paranoid || self.still_valid(ideal, mode, &r) {
                return Ok(r);
            }
        }
        let mut r = self.inner.sdepth(ideal, mode, hint)?;
        // the scan trace depends on the hint; keep cached and fresh output identical
        r.decisions.clear();
        if let Some(c) = &self.cache {
            c.put(&key, &r);
        }
        Ok(r)
    }
}

pub fn io_error(e: std::io::Error) -> Error {
    Error::Parameter(format!("cache: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use pathdepth::families::path_ideal;

    #[test]
    fn round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let c = Cache::open(dir.path()).unwrap();
        assert_eq!(c.get::<usize>("a"), None);
        c.put("a", &7usize);
        assert_eq!(c.get::<usize>("a"), Some(7));
        fs::write(c.path("a"), b"{not json").unwrap();
        assert_eq!(c.get::<usize>("a"), None);
    }

    #[test]
    fn paranoid_rejects_a_tampered_certificate() {
        let dir = tempfile::tempdir().unwrap();
        let o = Cached { inner: Direct::default(), cache: Some(Cache::open(dir.path()).unwrap()), paranoid: true };
        let i = path_ideal(4, 2).unwrap();
        let fresh = o.sdepth(&i, Mode::Quotient, None).unwrap();
        let key = o.sdepth_key(&i, Mode::Quotient);
        let mut bad = fresh.clone();
        bad.value += 1;
        bad.certificate.claimed_min_rho += 1;
        o.cache.as_ref().unwrap().put(&key, &bad);
        assert_eq!(o.sdepth(&i, Mode::Quotient, None).unwrap(), fresh);
    }
}
