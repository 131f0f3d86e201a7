use crate::args::*;
use crate::cache::{io_error, Cache, Cached};
use crate::report::{opt, tagged, Report};
use pathdepth::depth::{betti_table, BettiOptions};
use pathdepth::families::PathParams;
use pathdepth::monomial::text::{parse_ideal, parse_monomial};
use pathdepth::sdepth::{build_poset, sdepth_pair, Engine, IntervalPartition, Mode, SdepthOptions};
use pathdepth::verify::{
    explore_stefan, identity_items, run_sweep, umt_items, CheckItem, Direct, LemmaId, Oracle, SweepConfig, SweepRow,
};
use pathdepth::{Error, Field, MonomialIdeal, Result};
use serde_json::{json, Value};
use std::io::Write;
use std::path::Path;
use std::time::Duration;

/// Runs one command; `Ok(false)` means a must-hold check failed.
pub fn run(cmd: Command, out: &mut dyn Write) -> Result<bool> {
    match cmd {
        Command::Depth(a) => depth(a, out),
        Command::Sdepth(a) => sdepth(a, out),
        Command::Betti(a) => betti(a, out),
        Command::Sweep(a) => sweep(a, out),
        Command::Check(a) => check(a, out),
        Command::ExploreStefan(a) => stefan(a, out),
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parameter(format!("cannot read {}: {e}", path.display())))
}

fn load(source: &Source, t: u32) -> Result<(MonomialIdeal, String)> {
    if t == 0 {
        return Err(Error::Parameter("--t must be at least 1".into()));
    }
    match (&source.path, &source.file) {
        (Some(p), _) => {
            let params = PathParams::new(p[0], p[1], t as usize)?;
            Ok((params.ideal()?, format!("I_{{{},{}}}^{t}", p[0], p[1])))
        }
        (None, Some(f)) => {
            let base = parse_ideal(&read(f)?)?;
            let ideal = if t == 1 { base } else { base.power(t)? };
            let suffix = if t == 1 { String::new() } else { format!("^{t}") };
            Ok((ideal, format!("{}{suffix}", f.display())))
        }
        (None, None) => Err(Error::Parameter("give --path N M or --file PATH".into())),
    }
}

fn direct(c: &Common) -> Direct {
    Direct {
        betti: BettiOptions {
            field: match c.field {
                FieldArg::Rational => Field::Rational,
                FieldArg::Char2 => Field::Char2,
            },
            max_gens: c.max_gens,
            parallel: !c.sequential,
            ..Default::default()
        },
        sdepth: SdepthOptions {
            engine: match c.engine {
                EngineArg::Sat => Engine::Sat,
                EngineArg::Backtrack => Engine::Backtrack,
            },
            timeout: Some(Duration::from_secs(c.timeout_secs)),
            max_poset: c.max_poset,
            ..Default::default()
        },
    }
}

fn oracle(c: &Common, inner: Direct) -> Result<Cached> {
    let cache = match &c.cache_dir {
        Some(d) => Some(Cache::open(d).map_err(io_error)?),
        None => None,
    };
    Ok(Cached { inner, cache, paranoid: c.paranoid })
}

fn metadata(command: &str, c: &Common) -> Value {
    json!({
        "kind": "metadata",
        "tool": "pathdepth",
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "field": format!("{:?}", c.field).to_lowercase(),
        "engine": format!("{:?}", c.engine).to_lowercase(),
        "caps": {"timeout_secs": c.timeout_secs, "max_poset": c.max_poset, "max_gens": c.max_gens},
    })
}

fn emit(report: &Report, command: &str, c: &Common, out: &mut dyn Write) -> Result<()> {
    report
        .write(c.format, &metadata(command, c), out)
        .map_err(|e| Error::Parameter(format!("cannot write output: {e}")))
}

fn parse_range(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::Parameter(format!("bad range {s:?}, expected A..B or A"));
    let num = |x: &str| x.trim().parse::<usize>().map_err(|_| bad());
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
            if a > b {
                return Err(bad());
            }
            Ok((a, b))
        }
        None => num(s).map(|a| (a, a)),
    }
}

fn depth(a: DepthArgs, out: &mut dyn Write) -> Result<bool> {
    let (ideal, label) = load(&a.source, a.t)?;
    let o = oracle(&a.common, direct(&a.common))?;
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::Domain("depth needs a proper nonzero ideal".into()));
    }
    let pd = o.pd_quotient(&ideal)?;
    let n = ideal.n();
    let mut r = Report::new(vec!["ideal", "n", "gens", "depth(S/I)", "depth(I)", "pd(S/I)"]);
    r.push(
        vec![label.clone(), n.to_string(), ideal.num_gens().to_string(), (n - pd).to_string(), (n - pd + 1).to_string(), pd.to_string()],
        json!({"kind": "depth", "ideal": label, "n": n, "num_gens": ideal.num_gens(),
               "depth_quotient": n - pd, "depth_ideal": n - pd + 1, "pd": pd}),
    );
    emit(&r, "depth", &a.common, out)?;
    Ok(true)
}

fn betti(a: BettiArgs, out: &mut dyn Write) -> Result<bool> {
    let (ideal, label) = load(&a.source, a.t)?;
    let table = betti_table(&ideal, &direct(&a.common).betti)?;
    let mut r = Report::new(vec!["i", "degree", "rank"]);
    for row in &table.rows {
        let deg = row.degree.to_string();
        r.push(
            vec![row.i.to_string(), deg.clone(), row.rank.to_string()],
            json!({"kind": "betti", "ideal": label, "i": row.i, "degree": row.degree, "rank": row.rank}),
        );
    }
    r.notes.push(format!("totals {:?}, pd {}", table.totals(), table.pd()));
    emit(&r, "betti", &a.common, out)?;
    Ok(true)
}

fn sdepth(a: SdepthArgs, out: &mut dyn Write) -> Result<bool> {
    let (ideal, label) = load(&a.source, a.t)?;
    let mode = match a.mode {
        ModeArg::Quotient => Mode::Quotient,
        ModeArg::Ideal => Mode::Ideal,
        ModeArg::Pair => Mode::Pair,
    };
    let sub = match (&a.sub, mode) {
        (Some(p), Mode::Pair) => Some(parse_ideal(&read(p)?)?),
        (None, Mode::Pair) => return Err(Error::Parameter("pair mode needs --sub".into())),
        (Some(_), _) => return Err(Error::Parameter("--sub is only used with --mode pair".into())),
        (None, _) => None,
    };
    let mut inner = direct(&a.common);
    if let Some(g) = &a.g {
        inner.sdepth.g_override = Some(parse_monomial(g, ideal.n(), 0)?);
    }

    if let Some(path) = &a.check_certificate {
        let cert: IntervalPartition = serde_json::from_str(&read(path)?)
            .map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })?;
        let poset = build_poset(&ideal, sub.as_ref(), cert.mode, Some(&cert.g), a.common.max_poset)?;
        let verdict = pathdepth::sdepth::verify_partition(&poset, &cert, cert.claimed_min_rho);
        let mut r = Report::new(vec!["certificate", "min rho", "accepted", "defects"]);
        let defects: Vec<String> = verdict.defects.iter().map(|d| d.to_string()).collect();
        r.push(
            vec![path.display().to_string(), cert.claimed_min_rho.to_string(), verdict.accepted().to_string(), defects.join("; ")],
            json!({"kind": "certificate_check", "ideal": label, "min_rho": cert.claimed_min_rho,
                   "accepted": verdict.accepted(), "defects": defects}),
        );
        emit(&r, "sdepth", &a.common, out)?;
        return Ok(verdict.accepted());
    }

    let result = match &sub {
        Some(j) => sdepth_pair(&ideal, j, &SdepthOptions { start_hint: a.hint, ..inner.sdepth.clone() })?,
        None => oracle(&a.common, inner)?.sdepth(&ideal, mode, a.hint)?,
    };
    if let Some(path) = &a.certificate {
        let text = serde_json::to_string_pretty(&result.certificate).expect("certificate serializes");
        std::fs::write(path, text + "\n")
            .map_err(|e| Error::Parameter(format!("cannot write {}: {e}", path.display())))?;
    }
    let cert_path = a.certificate.as_ref().map(|p| p.display().to_string());
    let mut r = Report::new(vec!["ideal", "mode", "sdepth", "poset", "intervals", "certificate"]);
    r.push(
        vec![
            label.clone(),
            mode.to_string(),
            result.value.to_string(),
            result.poset_size.to_string(),
            result.certificate.intervals.len().to_string(),
            opt(&cert_path),
        ],
        json!({"kind": "sdepth", "ideal": label, "mode": mode, "value": result.value,
               "poset_size": result.poset_size, "upper_bound": result.upper_bound,
               "intervals": result.certificate.intervals.len(), "certificate": cert_path}),
    );
    emit(&r, "sdepth", &a.common, out)?;
    Ok(true)
}

fn checks_summary(row: &SweepRow) -> String {
    row.checks.iter().map(|(k, s)| format!("{k}:{}", s.label())).collect::<Vec<_>>().join(" ")
}

fn sweep(a: SweepArgs, out: &mut dyn Write) -> Result<bool> {
    let cfg = SweepConfig {
        n: parse_range(&a.n)?,
        m: parse_range(&a.m)?,
        t: parse_range(&a.t)?,
        sdepth_quotient: a.sdepth,
        sdepth_ideal: a.sdepth_ideal,
        parallel: !a.common.sequential,
    };
    let o = oracle(&a.common, direct(&a.common))?;
    let rows = run_sweep(&cfg, &o)?;
    let mut r = Report::new(vec![
        "n", "m", "t", "branch", "gens", "depth", "phi", "pd", "pd formula", "sdepth(S/I)", "sdepth(I)",
        "quotient upper", "ideal upper", "checks", "runtime_ms",
    ]);
    for row in &rows {
        r.push(
            vec![
                row.n.to_string(),
                row.m.to_string(),
                row.t.to_string(),
                format!("{:?}", row.branch).to_lowercase(),
                row.num_gens.to_string(),
                opt(&row.depth_computed),
                row.phi.to_string(),
                opt(&row.pd_computed),
                row.pd_formula.to_string(),
                opt(&row.sdepth_quotient),
                opt(&row.sdepth_ideal),
                row.bounds.quotient_upper.to_string(),
                row.bounds.ideal_upper.to_string(),
                checks_summary(row),
                row.runtime_ms.to_string(),
            ],
            tagged("sweep_row", row),
        );
    }
    let failed = rows.iter().filter(|r| r.failed()).count();
    r.notes.push(format!("{} rows, {failed} with a failed check", rows.len()));
    emit(&r, "sweep", &a.common, out)?;
    Ok(failed == 0)
}

fn check(a: CheckArgs, out: &mut dyn Write) -> Result<bool> {
    let id: LemmaId = a.lemma.parse()?;
    let items: Vec<CheckItem> = match id {
        LemmaId::Umt => umt_items(a.m, a.t, &oracle(&a.common, direct(&a.common))?)?,
        _ => {
            let n = a.n.ok_or_else(|| Error::Parameter(format!("{id} needs --n")))?;
            identity_items(id, n, a.m, a.t, a.k)?
        }
    };
    let mut r = Report::new(vec!["lemma", "check", "status", "detail"]);
    for item in &items {
        let mut rec = tagged("check", item);
        rec["lemma"] = json!(id);
        r.push(vec![id.to_string(), item.name.clone(), item.status.to_string(), item.detail.clone()], rec);
    }
    emit(&r, "check", &a.common, out)?;
    Ok(!items.iter().any(|i| i.status.is_fail()))
}

fn stefan(a: StefanArgs, out: &mut dyn Write) -> Result<bool> {
    let o = oracle(&a.common, direct(&a.common))?;
    let rows = explore_stefan(parse_range(&a.n)?, parse_range(&a.t)?, &o)?;
    let mut r = Report::new(vec!["n", "t", "computed", "formula", "agree"]);
    for row in &rows {
        let agree = match row.agree {
            Some(true) => "yes".to_string(),
            Some(false) => "no".to_string(),
            None => format!("unknown ({})", row.note),
        };
        r.push(
            vec![row.n.to_string(), row.t.to_string(), opt(&row.computed), row.formula.to_string(), agree],
            tagged("stefan_row", row),
        );
    }
    r.notes.push("EXPLORATORY: formula max{⌈(n+t-1)/3⌉, 1} is a stated claim; disagreement is reported, not an error.".into());
    emit(&r, "explore-stefan", &a.common, out)?;
    Ok(true)
}
