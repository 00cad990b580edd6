//! The `hyperideal` command line.
//!
//! Inputs are ring documents on disk or `fixture:NAME`. Output is
//! assembled in memory and written once; exit codes are 0 for success, 1
//! for a counterexample or an unmet `--expect`, and 2 for bad input or a
//! ring that fails its axioms.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::constructions::{product_ring, quotient_ring};
use crate::error::{Error, Result};
use crate::harness::{
    fixture, parse_theorem_list, render_json, render_table, run_suite, suite_outcome, unexercised,
    without_timings, SuiteOutcome, DEFAULT_SUITE, FIXTURES,
};
use crate::ideals::{classify_ideal, IdealLattice, IdealProfile, Mode, ProductWitness, Verdict};
use crate::kernel::{
    check_axioms, parse_spec, serialize_spec, verify_axioms_with, Distributivity, HyperRing,
    HyperRingSpec,
};
use crate::multiplicative::{
    is_s_hyperideal, maximal_ms_for, residual, saturation, MulSet, SClassification, SVerdict,
};
use crate::subset::SubsetMask;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "hyperideal", version, about = "Finite Krasner (m,n)-hyperrings and S-hyperideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Whether hyperideals must be closed under negation. Lenient also
    /// accepts rings whose distributivity holds only as an inclusion.
    #[arg(long, default_value = "lenient", global = true)]
    mode: Mode,
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    /// Write the main output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check every axiom and report witnesses.
    Verify {
        input: String,
        #[command(flatten)]
        common: Common,
    },
    /// List hyperideals, primes, maximals and special sets.
    Ideals {
        input: String,
        #[command(flatten)]
        common: Common,
    },
    /// Classify a hyperideal, or decide the S-condition with --s.
    Classify {
        input: String,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        s: Option<String>,
        /// One of s-hyperideal, sr-only, neither (with --s) or prime,
        /// primary, semiprime, maximal (without).
        #[arg(long)]
        expect: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// r(P), and the largest multiplicative set P is an S-hyperideal for.
    Radical {
        input: String,
        #[arg(long)]
        ideal: String,
        #[command(flatten)]
        common: Common,
    },
    /// Q^S.
    Saturate {
        input: String,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        s: String,
        #[command(flatten)]
        common: Common,
    },
    /// P_X for the subset given by --s.
    Residual {
        input: String,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        s: String,
        #[command(flatten)]
        common: Common,
    },
    /// A/P as a ring document.
    Quotient {
        input: String,
        #[arg(long)]
        ideal: String,
        #[command(flatten)]
        common: Common,
    },
    /// The cartesian product of two or more rings as a ring document.
    Product {
        #[arg(required = true, num_args = 2..)]
        inputs: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Run the theorem catalog. Without inputs, the default fixture set.
    Theorems {
        inputs: Vec<String>,
        /// Comma-separated catalog ids.
        #[arg(long)]
        only: Option<String>,
        /// Include per-report runtimes (breaks byte-identical output).
        #[arg(long)]
        timings: bool,
        #[command(flatten)]
        common: Common,
    },
    /// List fixtures, or print one as a ring document.
    Fixtures {
        name: Option<String>,
        #[command(flatten)]
        common: Common,
    },
}

/// What a command produced before it is written out.
struct Output {
    body: String,
    code: i32,
    warnings: Vec<String>,
}

impl Output {
    fn ok(body: String) -> Self {
        Output {
            body,
            code: 0,
            warnings: Vec::new(),
        }
    }
}

/// Parses `argv` (program name first) and runs it against the process
/// streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// [`run`] with explicit streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let (common, result) = dispatch(cli.command);
    match result {
        Ok(o) => {
            for w in &o.warnings {
                let _ = writeln!(err, "warning: {w}");
            }
            if let Some(path) = &common.out {
                if let Err(e) = std::fs::write(path, &o.body) {
                    let e = Error::Io {
                        path: path.display().to_string(),
                        source: e,
                    };
                    let _ = writeln!(err, "error: {e}");
                    return 2;
                }
            } else {
                let _ = out.write_all(o.body.as_bytes());
            }
            let _ = out.flush();
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch(cmd: Command) -> (Common, Result<Output>) {
    match cmd {
        Command::Verify { input, common } => {
            let r = verify(&input, &common);
            (common, r)
        }
        Command::Ideals { input, common } => {
            let r = load(&input, common.mode).and_then(|(ring, w)| ideals(&ring, &common).map(|o| warn(o, w)));
            (common, r)
        }
        Command::Classify {
            input,
            ideal,
            s,
            expect,
            common,
        } => {
            let r = load(&input, common.mode).and_then(|(ring, w)| {
                classify(&ring, &ideal, s.as_deref(), expect.as_deref(), &common).map(|o| warn(o, w))
            });
            (common, r)
        }
        Command::Radical { input, ideal, common } => {
            let r = load(&input, common.mode)
                .and_then(|(ring, w)| radical_cmd(&ring, &ideal, &common).map(|o| warn(o, w)));
            (common, r)
        }
        Command::Saturate {
            input,
            ideal,
            s,
            common,
        } => {
            let r = load(&input, common.mode)
                .and_then(|(ring, w)| saturate_cmd(&ring, &ideal, &s, &common).map(|o| warn(o, w)));
            (common, r)
        }
        Command::Residual {
            input,
            ideal,
            s,
            common,
        } => {
            let r = load(&input, common.mode)
                .and_then(|(ring, w)| residual_cmd(&ring, &ideal, &s, &common).map(|o| warn(o, w)));
            (common, r)
        }
        Command::Quotient { input, ideal, common } => {
            let r = load(&input, common.mode)
                .and_then(|(ring, w)| quotient_cmd(ring, &ideal, &common).map(|o| warn(o, w)));
            (common, r)
        }
        Command::Product { inputs, common } => {
            let r = product_cmd(&inputs, &common);
            (common, r)
        }
        Command::Theorems {
            inputs,
            only,
            timings,
            common,
        } => {
            let r = theorems_cmd(&inputs, only.as_deref(), timings, &common);
            (common, r)
        }
        Command::Fixtures { name, common } => {
            let r = fixtures_cmd(name.as_deref(), &common);
            (common, r)
        }
    }
}

fn warn(mut o: Output, w: Option<String>) -> Output {
    o.warnings.extend(w);
    o
}

fn law(mode: Mode) -> Distributivity {
    match mode {
        Mode::Strict => Distributivity::Equal,
        Mode::Lenient => Distributivity::Includes,
    }
}

fn read_spec(input: &str) -> Result<HyperRingSpec> {
    if let Some(name) = input.strip_prefix("fixture:") {
        return Ok(fixture(name)?.spec().clone());
    }
    let path = Path::new(input);
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: input.to_string(),
        source: e,
    })?;
    parse_spec(&text)
}

/// Verification is slow past these orders; warn, never refuse.
fn size_warning(spec: &HyperRingSpec) -> Option<String> {
    let big = match spec.m {
        2 => spec.order() > 16,
        _ => spec.order() > 8,
    };
    big.then(|| {
        format!(
            "{} has order {}; exhaustive verification may be slow",
            spec.name,
            spec.order()
        )
    })
}

/// Documents are verified under the law `mode` implies; fixtures keep the
/// law they are registered with.
fn load(input: &str, mode: Mode) -> Result<(Arc<HyperRing>, Option<String>)> {
    if let Some(name) = input.strip_prefix("fixture:") {
        return Ok((Arc::new(fixture(name)?), None));
    }
    let spec = read_spec(input)?;
    let w = size_warning(&spec);
    Ok((Arc::new(verify_axioms_with(spec, law(mode))?), w))
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn verify(input: &str, common: &Common) -> Result<Output> {
    let spec = read_spec(input)?;
    let w = size_warning(&spec);
    let report = check_axioms(&spec, law(common.mode))?;
    let ok = report.all_pass();
    let body = match common.format {
        Format::Json => json_text(&serde_json::to_value(&report).expect("report serializes")),
        Format::Text => {
            let mut s = format!(
                "{}: order {}, (m,n) = ({},{}), distributivity law {}\n",
                spec.name,
                spec.order(),
                spec.m,
                spec.n,
                report.law
            );
            s.push_str(&report.render(&spec));
            if ok {
                s.push_str("all axioms hold\n");
            } else {
                s.push_str(&format!("{} axiom(s) fail\n", report.failures().count()));
            }
            s
        }
    };
    Ok(warn(
        Output {
            body,
            code: if ok { 0 } else { 2 },
            warnings: Vec::new(),
        },
        w,
    ))
}

fn show(ring: &HyperRing, s: &SubsetMask) -> String {
    ring.format_subset(s)
}

fn shows(ring: &HyperRing, v: &[SubsetMask]) -> Vec<String> {
    v.iter().map(|s| show(ring, s)).collect()
}

fn ideals(ring: &HyperRing, common: &Common) -> Result<Output> {
    let lat = IdealLattice::new(ring, common.mode)?;
    let all = lat.hyperideals();
    let special = lat.special_sets();
    let rows: Vec<(String, bool, bool)> = all
        .iter()
        .map(|p| {
            let prime = lat.primes().contains(p);
            let maximal = lat.maximals().contains(p);
            (show(ring, p), prime, maximal)
        })
        .collect();
    let body = match common.format {
        Format::Json => json_text(&json!({
            "ring": ring.name(),
            "mode": common.mode.as_str(),
            "hyperideals": rows.iter().map(|(s, p, m)| json!({"subset": s, "prime": p, "maximal": m})).collect::<Vec<_>>(),
            "units": show(ring, &special.units),
            "regulars": show(ring, &special.regulars),
            "jacobson": show(ring, &special.jacobson),
            "minimal_primes": shows(ring, &special.min_primes),
        })),
        Format::Text => {
            let mut s = format!("{} hyperideals of {} ({} mode)\n", all.len(), ring.name(), common.mode);
            for (sub, p, m) in &rows {
                let mut tags = Vec::new();
                if *p {
                    tags.push("prime");
                }
                if *m {
                    tags.push("maximal");
                }
                let line = format!("  {sub:<20} {}", tags.join(" "));
                s.push_str(line.trim_end());
                s.push('\n');
            }
            s.push_str(&format!("units     {}\n", show(ring, &special.units)));
            s.push_str(&format!("regulars  {}\n", show(ring, &special.regulars)));
            s.push_str(&format!("jacobson  {}\n", show(ring, &special.jacobson)));
            s.push_str(&format!("min       {}\n", shows(ring, &special.min_primes).join(" ")));
            s
        }
    };
    Ok(Output::ok(body))
}

fn witness_json(ring: &HyperRing, w: &ProductWitness) -> Value {
    json!({
        "tuple": ring.format_tuple(&w.tuple),
        "position": w.position,
        "product": ring.name_of(w.product),
        "substituted": w.substituted.map(|e| ring.name_of(e).to_string()),
    })
}

fn witness_text(ring: &HyperRing, w: &ProductWitness) -> String {
    let mut s = format!("witness {}", ring.format_tuple(&w.tuple));
    if let Some(p) = w.position {
        s.push_str(&format!(" at position {p}"));
    }
    s
}

fn classify(
    ring: &HyperRing,
    ideal: &str,
    s: Option<&str>,
    expect: Option<&str>,
    common: &Common,
) -> Result<Output> {
    let p = ring.parse_subset(ideal)?;
    match s {
        Some(s) => {
            let ms = MulSet::new(ring, ring.parse_subset(s)?)?;
            let c = is_s_hyperideal(ring, &p, &ms, common.mode)?;
            let body = match common.format {
                Format::Json => json_text(&s_json(ring, &p, &ms, &c)),
                Format::Text => s_text(ring, &c),
            };
            let code = match expect {
                None => 0,
                Some(e) => {
                    let e = parse_s_expectation(e)?;
                    i32::from(e != c.verdict)
                }
            };
            Ok(Output {
                body,
                code,
                warnings: Vec::new(),
            })
        }
        None => {
            let prof = classify_ideal(ring, &p, common.mode)?;
            let body = match common.format {
                Format::Json => json_text(&profile_json(ring, &prof)),
                Format::Text => profile_text(ring, &prof),
            };
            let code = match expect {
                None => 0,
                Some(e) => i32::from(!profile_has(&prof, e)?),
            };
            Ok(Output {
                body,
                code,
                warnings: Vec::new(),
            })
        }
    }
}

fn parse_s_expectation(e: &str) -> Result<SVerdict> {
    [SVerdict::SHyperideal, SVerdict::SrOnly, SVerdict::Neither]
        .into_iter()
        .find(|v| v.as_str() == e)
        .ok_or_else(|| Error::Usage(format!("--expect {e}: expected s-hyperideal, sr-only or neither")))
}

fn profile_has(p: &IdealProfile, e: &str) -> Result<bool> {
    Ok(match e {
        "prime" => p.prime.holds(),
        "primary" => p.primary.holds(),
        "semiprime" => p.semiprime.holds(),
        "maximal" => p.maximal.holds(),
        other => {
            return Err(Error::Usage(format!(
                "--expect {other}: expected prime, primary, semiprime or maximal"
            )))
        }
    })
}

fn s_text(ring: &HyperRing, c: &SClassification) -> String {
    match (&c.verdict, &c.witness) {
        (SVerdict::SHyperideal, _) => "S-hyperideal\n".to_string(),
        (v, Some(w)) => {
            let mut s = format!("not an S-hyperideal; {}\n", witness_text(ring, w));
            s.push_str(&format!("  {}\n", w.describe(ring)));
            if *v == SVerdict::SrOnly {
                s.push_str("  S_r-hyperideal: yes\n");
            } else if let Some(sr) = &c.sr_witness {
                s.push_str(&format!("  S_r-hyperideal: no, {}\n", witness_text(ring, sr)));
            }
            s
        }
        (_, None) => unreachable!("a failed S-condition carries a witness"),
    }
}

fn s_json(ring: &HyperRing, p: &SubsetMask, s: &MulSet, c: &SClassification) -> Value {
    json!({
        "ring": ring.name(),
        "mode": c.mode.as_str(),
        "ideal": show(ring, p),
        "s": show(ring, &s.subset()),
        "verdict": c.verdict.as_str(),
        "witness": c.witness.as_ref().map(|w| witness_json(ring, w)),
        "sr_witness": c.sr_witness.as_ref().map(|w| witness_json(ring, w)),
    })
}

fn verdict_text<W>(v: &Verdict<W>, f: impl Fn(&W) -> String) -> String {
    match v {
        Verdict::Holds => "yes".to_string(),
        Verdict::Fails(w) => format!("no, {}", f(w)),
    }
}

fn profile_text(ring: &HyperRing, p: &IdealProfile) -> String {
    let mut s = format!("{} in {} ({} mode)\n", show(ring, &p.subset), ring.name(), p.mode);
    s.push_str(&format!(
        "  prime      {}\n",
        verdict_text(&p.prime, |w| w.describe(ring))
    ));
    s.push_str(&format!(
        "  primary    {}\n",
        verdict_text(&p.primary, |w| w.describe(ring))
    ));
    s.push_str(&format!(
        "  semiprime  {}\n",
        verdict_text(&p.semiprime, |e| format!("{} has its n-th power inside", ring.name_of(*e)))
    ));
    s.push_str(&format!(
        "  maximal    {}\n",
        verdict_text(&p.maximal, |m| format!("{} lies strictly above", show(ring, m)))
    ));
    s.push_str(&format!("  radical    {}\n", show(ring, &p.radical)));
    s
}

fn profile_json(ring: &HyperRing, p: &IdealProfile) -> Value {
    fn v<W>(x: &Verdict<W>, f: impl Fn(&W) -> Value) -> Value {
        match x {
            Verdict::Holds => json!({"holds": true}),
            Verdict::Fails(w) => json!({"holds": false, "witness": f(w)}),
        }
    }
    json!({
        "ring": ring.name(),
        "mode": p.mode.as_str(),
        "ideal": show(ring, &p.subset),
        "prime": v(&p.prime, |w| witness_json(ring, w)),
        "primary": v(&p.primary, |w| witness_json(ring, w)),
        "semiprime": v(&p.semiprime, |e| json!(ring.name_of(*e))),
        "maximal": v(&p.maximal, |m| json!(show(ring, m))),
        "radical": show(ring, &p.radical),
    })
}

fn radical_cmd(ring: &HyperRing, ideal: &str, common: &Common) -> Result<Output> {
    let p = ring.parse_subset(ideal)?;
    let r = crate::ideals::radical(ring, &p, common.mode)?;
    let star = maximal_ms_for(ring, &p, common.mode)?;
    let body = match common.format {
        Format::Json => json_text(&json!({
            "ring": ring.name(), "mode": common.mode.as_str(), "ideal": show(ring, &p),
            "radical": show(ring, &r), "largest_s": show(ring, &star.subset()),
        })),
        Format::Text => format!(
            "r({}) = {}\nlargest S = {}\n",
            show(ring, &p),
            show(ring, &r),
            show(ring, &star.subset())
        ),
    };
    Ok(Output::ok(body))
}

fn saturate_cmd(ring: &HyperRing, ideal: &str, s: &str, common: &Common) -> Result<Output> {
    let q = ring.parse_subset(ideal)?;
    let ms = MulSet::new(ring, ring.parse_subset(s)?)?;
    let sat = saturation(ring, &q, &ms, common.mode)?;
    let body = match common.format {
        Format::Json => json_text(&json!({
            "ring": ring.name(), "mode": common.mode.as_str(), "ideal": show(ring, &q),
            "s": show(ring, &ms.subset()), "saturation": show(ring, &sat.set),
            "missing_one": sat.missing_one, "vacuous": sat.vacuous,
        })),
        Format::Text => {
            let mut t = format!("{}^S = {}\n", show(ring, &q), show(ring, &sat.set));
            if sat.missing_one {
                t.push_str("note: 1 is not in S, minimality is not guaranteed\n");
            }
            if sat.vacuous {
                t.push_str("note: the saturation is the whole ring\n");
            }
            t
        }
    };
    Ok(Output::ok(body))
}

fn residual_cmd(ring: &HyperRing, ideal: &str, x: &str, common: &Common) -> Result<Output> {
    let p = ring.parse_subset(ideal)?;
    let x = ring.parse_subset(x)?;
    let r = residual(ring, &p, &x, common.mode)?;
    let body = match common.format {
        Format::Json => json_text(&json!({
            "ring": ring.name(), "mode": common.mode.as_str(), "ideal": show(ring, &p),
            "by": show(ring, &x), "residual": show(ring, &r),
        })),
        Format::Text => format!("{}_{} = {}\n", show(ring, &p), show(ring, &x), show(ring, &r)),
    };
    Ok(Output::ok(body))
}

fn document(ring: &HyperRing, common: &Common, header: String) -> String {
    match common.format {
        Format::Json => serialize_spec(ring.spec()),
        Format::Text if common.out.is_some() => serialize_spec(ring.spec()),
        Format::Text => format!("{header}{}", serialize_spec(ring.spec())),
    }
}

fn quotient_cmd(ring: Arc<HyperRing>, ideal: &str, common: &Common) -> Result<Output> {
    let p = ring.parse_subset(ideal)?;
    let q = quotient_ring(&ring, &p, common.mode)?;
    let mut header = format!("{} cosets of {}\n", q.cosets.len(), show(&ring, &p));
    for c in &q.cosets {
        header.push_str(&format!("  {}\n", show(&ring, c)));
    }
    Ok(Output::ok(document(&q.quotient, common, header)))
}

fn product_cmd(inputs: &[String], common: &Common) -> Result<Output> {
    let mut rings = Vec::new();
    let mut warnings = Vec::new();
    for i in inputs {
        let (r, w) = load(i, common.mode)?;
        rings.push(r);
        warnings.extend(w);
    }
    let refs: Vec<&HyperRing> = rings.iter().map(|r| r.as_ref()).collect();
    let p = product_ring(&refs)?;
    let header = format!("{} of order {}\n", p.name(), p.order());
    Ok(Output {
        body: document(&p, common, header),
        code: 0,
        warnings,
    })
}

fn theorems_cmd(inputs: &[String], only: Option<&str>, timings: bool, common: &Common) -> Result<Output> {
    let filter = only.map(parse_theorem_list).transpose()?;
    let mut rings = Vec::new();
    let mut warnings = Vec::new();
    if inputs.is_empty() {
        for name in DEFAULT_SUITE {
            rings.push(Arc::new(fixture(name)?));
        }
    }
    for i in inputs {
        let (r, w) = load(i, common.mode)?;
        rings.push(r);
        warnings.extend(w);
    }
    let mut reports = run_suite(&rings, common.mode, filter.as_deref())?;
    if !timings {
        without_timings(&mut reports);
    }
    let outcome = suite_outcome(&reports);
    let body = match common.format {
        Format::Json => {
            let mut s = render_json(&reports);
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = render_table(&reports);
            s.push_str(&format!("outcome: {}", outcome.as_str()));
            let gaps = unexercised(&reports);
            if !gaps.is_empty() {
                let ids: Vec<&str> = gaps.iter().map(|g| g.as_str()).collect();
                s.push_str(&format!(" (never exercised: {})", ids.join(", ")));
            }
            s.push('\n');
            s
        }
    };
    Ok(Output {
        body,
        code: i32::from(outcome == SuiteOutcome::Counterexample),
        warnings,
    })
}

fn fixtures_cmd(name: Option<&str>, common: &Common) -> Result<Output> {
    match name {
        Some(n) => {
            let r = fixture(n)?;
            Ok(Output::ok(serialize_spec(r.spec())))
        }
        None => {
            let rows: Vec<(HyperRing, bool)> = FIXTURES
                .iter()
                .map(|n| fixture(n).map(|r| (r, DEFAULT_SUITE.contains(n))))
                .collect::<Result<_>>()?;
            let body = match common.format {
                Format::Json => json_text(&Value::Array(
                    rows.iter()
                        .map(|(r, d)| {
                            json!({"name": r.name(), "order": r.order(), "m": r.m(), "n": r.n(),
                                   "distributivity": r.distributivity().to_string(), "default_suite": d})
                        })
                        .collect(),
                )),
                Format::Text => {
                    let mut s = String::new();
                    for (r, d) in &rows {
                        let line = format!(
                            "{:<14} order {:>2}  (m,n) = ({},{})  {:<8}{}",
                            r.name(),
                            r.order(),
                            r.m(),
                            r.n(),
                            r.distributivity().to_string(),
                            if *d { "  default" } else { "" }
                        );
                        s.push_str(line.trim_end());
                        s.push('\n');
                    }
                    s
                }
            };
            Ok(Output::ok(body))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("hyperideal").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn verify_fixture() {
        let (code, out, _) = call(&["verify", "fixture:paper-example"]);
        assert_eq!(code, 0);
        assert!(out.ends_with("all axioms hold\n"), "{out}");
        let (code, _, _) = call(&["verify", "fixture:paper-example", "--mode", "strict"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn classify_worked_example() {
        let (code, out, _) = call(&["classify", "fixture:paper-example", "--ideal", "0,2", "--s", "2"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("not an S-hyperideal; witness (1,1,2) at position 3\n"), "{out}");
        let (code, _, _) = call(&[
            "classify", "fixture:paper-example", "--ideal", "0,2", "--s", "2", "--expect", "s-hyperideal",
        ]);
        assert_eq!(code, 1);
    }

    #[test]
    fn bad_input_exits_2() {
        let (code, _, err) = call(&["classify", "fixture:z6", "--ideal", "0,7"]);
        assert_eq!(code, 2);
        assert!(err.contains('7'), "{err}");
        let (code, _, _) = call(&["frobnicate"]);
        assert_eq!(code, 2);
        let (code, _, err) = call(&["theorems", "fixture:z2", "--only", "T99"]);
        assert_eq!(code, 2);
        assert!(err.contains("T99"));
    }
}
