//! Command-line front end.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::algebra::{twist_charges, CentralCharges, Sl2};
use crate::analysis::appendix_c::verify_appendix_c;
use crate::analysis::hom::hom_space;
use crate::analysis::invariants::{kplus_invariants, multiplicity_dimension, restriction_multiplicities};
use crate::analysis::prop33::{displayed_rows, prop33_linear_relations};
use crate::analysis::sn_tn::{build_s, build_t, psl_decomposition, verify_prop36};
use crate::classify::{classify_g, classify_psl, classify_sl2, twist_module, ClassificationResult};
use crate::error::{Error, Result};
use crate::export::to_json_string;
use crate::kac::{build_kac, kac};
use crate::module::ModuleRep;
use crate::mz::appendix_b::{verify_appendix_b, FormulaSet};
use crate::mz::paths::admissible_table;
use crate::mz::relations::{verify_appendix_a, verify_z_squares};
use crate::mz::report::{verify_projector, SuiteReport, VerificationRecord};
use crate::mz::zops::word_name;
use crate::rational::{display_rational, format_rational, parse_rational, Rational};

#[derive(Parser, Debug)]
#[command(name = "psl22", version, about = "Exact modules of psl(2|2) ⋉ C³")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Opts,
}

#[derive(Args, Debug, Clone)]
pub struct Opts {
    #[arg(long, global = true, default_value_t = 0)]
    pub m: u32,
    #[arg(long, global = true, default_value_t = 0)]
    pub n: u32,
    /// Central charges `c,k,p` (rationals such as `1/2`).
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub charges: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Algebra::G)]
    pub algebra: Algebra,
    /// Value of `C` for `--algebra sl`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub c: Option<String>,
    /// SL(2) parameters `u,v,w,z` with `uz - vw = 1`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub sl2: Option<String>,
    /// Run over every `(m, n)` with `m, n ≤ MAX`.
    #[arg(long, global = true)]
    pub grid: Option<u32>,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algebra {
    G,
    Psl,
    Sl,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Structure,
    Projector,
    ZSquares,
    AppendixA,
    AppendixB,
    AppendixC,
    Prop33,
    Prop36,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dimension table with family labels.
    Dims,
    /// Build a module and check its brackets.
    Build,
    /// Write the module as exact JSON.
    ExportJson,
    /// Restriction multiplicities to sl(2) ⊕ sl(2), and S ⊕ T on the diagonal.
    Decompose,
    /// The 𝔨⁺-invariants with their admissible words.
    Invariants,
    /// Run a verification suite; exits nonzero on any failure.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Check the corrected raising-operator table instead of the printed one.
        #[arg(long)]
        corrected: bool,
    },
    /// Identify the irreducible module with the given highest weight.
    Classify {
        /// `μ1,μ3` for `--algebra g`; defaults to `(m, n + 2)`.
        #[arg(long)]
        mu: Option<String>,
    },
    /// Intertwiners between two named modules, e.g. `--left S:1 --right T:2`.
    Hom {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Twist a module by an SL(2) automorphism.
    Twist,
}

struct Ctx {
    opts: Opts,
    out: Box<dyn Write>,
}

impl Ctx {
    fn line(&mut self, s: impl AsRef<str>) -> Result<()> {
        writeln!(self.out, "{}", s.as_ref())?;
        Ok(())
    }

    fn json(&mut self, v: &serde_json::Value) -> Result<()> {
        let s = serde_json::to_string(v)?;
        self.line(s)
    }

    fn is_json(&self) -> bool {
        self.opts.format == Format::Json
    }

    fn pairs(&self) -> Vec<(u32, u32)> {
        match self.opts.grid {
            Some(g) => (0..=g).flat_map(|m| (0..=g).map(move |n| (m, n))).collect(),
            None => vec![(self.opts.m, self.opts.n)],
        }
    }
}

fn parse_list(s: &str, len: usize, what: &str) -> Result<Vec<Rational>> {
    let parts: Vec<Rational> = s.split(',').map(parse_rational).collect::<Result<_>>()?;
    if parts.len() != len {
        return Err(Error::Parse(format!("{what} needs {len} comma-separated values, got {s:?}")));
    }
    Ok(parts)
}

impl Opts {
    pub fn c_value(&self) -> Result<Rational> {
        let c = self
            .c
            .as_deref()
            .ok_or_else(|| Error::Parameter("--algebra sl needs --c".into()))?;
        parse_rational(c)
    }

    pub fn charges(&self) -> Result<CentralCharges> {
        if let Some(s) = &self.charges {
            let v = parse_list(s, 3, "--charges")?;
            return Ok(CentralCharges::new(v[0].clone(), v[1].clone(), v[2].clone()));
        }
        Ok(match self.algebra {
            Algebra::G => CentralCharges::standard(),
            Algebra::Psl => CentralCharges::zero(),
            Algebra::Sl => CentralCharges::sl(self.c_value()?),
        })
    }

    pub fn sl2(&self) -> Result<Sl2> {
        let s = self
            .sl2
            .as_deref()
            .ok_or_else(|| Error::Parameter("twist needs --sl2 u,v,w,z".into()))?;
        let v = parse_list(s, 4, "--sl2")?;
        Sl2::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone())
    }

    pub fn module(&self, m: u32, n: u32) -> Result<ModuleRep> {
        build_kac(m, n, &self.charges()?)
    }
}

/// Parses `S:1`, `T:2`, `K:1,2`, `L:1` (psl quotient) into a module.
pub fn named_module(spec: &str) -> Result<ModuleRep> {
    let bad = || Error::Parse(format!("module spec {spec:?}: expected S:n, T:n, K:m,n or L:n"));
    let (kind, args) = spec.split_once(':').ok_or_else(bad)?;
    let nums: Vec<u32> = args
        .split(',')
        .map(|x| x.trim().parse().map_err(|_| bad()))
        .collect::<Result<_>>()?;
    match (kind.trim(), nums.as_slice()) {
        ("S", [n]) => {
            let k = kac(*n, *n);
            build_s(&k)?.as_module(&k, format!("S{n}"))
        }
        ("T", [n]) => {
            let k = kac(*n, *n);
            let t = build_t(&k)?;
            if t.is_zero() {
                return Err(Error::Parameter("T_0 = 0".into()));
            }
            t.as_module(&k, format!("T{n}"))
        }
        ("K", [m, n]) => Ok(kac(*m, *n)),
        ("L", [n]) => Ok(psl_decomposition(*n)?.quotient),
        _ => Err(bad()),
    }
}

fn cmd_dims(ctx: &mut Ctx) -> Result<()> {
    for (m, n) in ctx.pairs() {
        let (label, value) = match ctx.opts.algebra {
            Algebra::G if m != n => {
                let d = kac(m, n).dim();
                (format!("K({m},{n}): {d}, irreducible"), json!({"module": format!("K({m},{n})"), "dimension": d, "irreducible": true}))
            }
            Algebra::G => {
                let k = kac(n, n);
                let (s, t) = (build_s(&k)?.dim(), build_t(&k)?.dim());
                let text = if t == 0 {
                    format!("K({n},{n}) = S{n} ({s})")
                } else {
                    format!("K({n},{n}) = S{n} ({s}) ⊕ T{n} ({t})")
                };
                (text, json!({"module": format!("K({n},{n})"), "dimension": k.dim(), "S": s, "T": t}))
            }
            Algebra::Psl if m != n => {
                let d = kac(m, n).dim();
                (format!("K°({m},{n}): {d}, irreducible"), json!({"module": format!("K°({m},{n})"), "dimension": d}))
            }
            Algebra::Psl => {
                let d = psl_decomposition(n)?.quotient.dim();
                (format!("L°({n},{n}): {d}"), json!({"module": format!("L°({n},{n})"), "dimension": d}))
            }
            Algebra::Sl => {
                let r = classify_sl2(m, n, &ctx.opts.c_value()?)?;
                (format!("{}: {}", r.family, r.dimension.unwrap_or(0)), r.to_json())
            }
        };
        if ctx.is_json() {
            ctx.json(&value)?;
        } else {
            ctx.line(label)?;
        }
    }
    Ok(())
}

fn cmd_build(ctx: &mut Ctx) -> Result<bool> {
    let mut ok = true;
    for (m, n) in ctx.pairs() {
        let module = ctx.opts.module(m, n)?;
        let rep = module.verify_structure();
        ok &= rep.passed();
        if ctx.is_json() {
            ctx.json(&json!({
                "module": module.name,
                "dimension": module.dim(),
                "charges": {
                    "c": format_rational(&module.charges.c),
                    "k": format_rational(&module.charges.k),
                    "p": format_rational(&module.charges.p),
                },
                "nonzero_entries": module.nnz(),
                "pairs_checked": rep.pairs_checked,
                "structure": rep.passed(),
            }))?;
        } else {
            ctx.line(format!(
                "{}: dim {}, charges {}, {} nonzero entries, brackets {} ({} pairs)",
                module.name,
                module.dim(),
                module.charges,
                module.nnz(),
                if rep.passed() { "ok" } else { "FAIL" },
                rep.pairs_checked
            ))?;
        }
    }
    Ok(ok)
}

fn cmd_export(ctx: &mut Ctx) -> Result<()> {
    let module = ctx.opts.module(ctx.opts.m, ctx.opts.n)?;
    let s = to_json_string(&module)?;
    ctx.out.write_all(s.as_bytes())?;
    Ok(())
}

fn cmd_decompose(ctx: &mut Ctx) -> Result<()> {
    for (m, n) in ctx.pairs() {
        let module = ctx.opts.module(m, n)?;
        let mult = restriction_multiplicities(&module)?;
        let total = multiplicity_dimension(&mult);
        let st = if m == n && ctx.opts.algebra == Algebra::G {
            Some((build_s(&module)?.dim(), build_t(&module)?.dim()))
        } else {
            None
        };
        if ctx.is_json() {
            let entries: Vec<_> = mult.iter().map(|(w, c)| json!({"weight": [w.a, w.b], "multiplicity": c})).collect();
            ctx.json(&json!({
                "module": module.name,
                "dimension": module.dim(),
                "restriction": entries,
                "sum": total,
                "S": st.map(|x| x.0),
                "T": st.map(|x| x.1),
            }))?;
        } else {
            let parts: Vec<String> = mult.iter().map(|(w, c)| format!("{c} L0{w}")).collect();
            ctx.line(format!("{} = {}", module.name, parts.join(" ⊕ ")))?;
            ctx.line(format!("  Σ c(r+1)(s+1) = {total}, dim = {}", module.dim()))?;
            if let Some((s, t)) = st {
                ctx.line(format!("  K({n},{n}) = S{n} ({s}) ⊕ T{n} ({t})"))?;
            }
        }
    }
    Ok(())
}

fn cmd_invariants(ctx: &mut Ctx) -> Result<()> {
    for (m, n) in ctx.pairs() {
        let module = ctx.opts.module(m, n)?;
        let vplus = kplus_invariants(&module)?;
        let table = admissible_table(m, n);
        let words: Vec<_> = table
            .rows
            .iter()
            .flat_map(|((da, db), ws)| {
                ws.iter().map(move |w| (word_name(w), [m as i64 + da, n as i64 + db]))
            })
            .collect();
        if ctx.is_json() {
            let ws: Vec<_> = words.iter().map(|(w, wt)| json!({"word": w, "weight": wt})).collect();
            let mult: Vec<_> = vplus
                .multiplicities()
                .iter()
                .map(|(w, c)| json!({"weight": [w.a, w.b], "multiplicity": c}))
                .collect();
            ctx.json(&json!({"module": module.name, "vplus_dim": vplus.dim(), "regime": table.regime, "words": ws, "weights": mult}))?;
        } else {
            ctx.line(format!("{}: dim V+ = {} (regime {})", module.name, vplus.dim(), table.regime))?;
            for (w, wt) in words {
                ctx.line(format!("  [{},{}]  {w}", wt[0], wt[1]))?;
            }
        }
    }
    Ok(())
}

fn prop33_report(m: u32, n: u32) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("prop33");
    let r = prop33_linear_relations(m, n)?;
    let d = displayed_rows(m, n);
    let fmt = |v: &[Rational]| {
        let parts: Vec<String> = v.iter().map(display_rational).collect();
        format!("({})", parts.join(", "))
    };
    let name = format!("K({m},{n})");
    let mut push = |id: &str, lhs: String, rhs: String| {
        let pass = lhs == rhs;
        rep.push(VerificationRecord { relation_id: id.into(), module: name.clone(), vector_label: "weight [m,n]".into(), lhs, rhs, pass });
    };
    push("z23 row", fmt(&r.z23_row), fmt(&d[0]));
    push("z24 row", fmt(&r.z24_row), fmt(&d[1]));
    push("c4 forced", r.forces_c4().to_string(), "true".into());
    push("singular iff m = n", r.is_singular().to_string(), (m == n).to_string());
    Ok(rep)
}

fn run_suite(ctx: &Ctx, suite: Suite, corrected: bool, m: u32, n: u32) -> Result<Option<SuiteReport>> {
    let opts = &ctx.opts;
    Ok(Some(match suite {
        Suite::Structure => {
            let module = opts.module(m, n)?;
            let s = module.verify_structure();
            let mut rep = SuiteReport::new("structure");
            for (x, y) in &s.failures {
                rep.push(VerificationRecord {
                    relation_id: format!("[{x},{y}]"),
                    module: module.name.clone(),
                    vector_label: "matrix".into(),
                    lhs: "ρ([x,y])".into(),
                    rhs: "[ρ(x),ρ(y)]".into(),
                    pass: false,
                });
            }
            rep.push(VerificationRecord {
                relation_id: "all brackets".into(),
                module: module.name.clone(),
                vector_label: "matrix".into(),
                lhs: format!("{} failures", s.failures.len()),
                rhs: "0 failures".into(),
                pass: s.passed(),
            });
            rep
        }
        Suite::Projector => verify_projector(&opts.module(m, n)?)?,
        Suite::ZSquares => verify_z_squares(&opts.module(m, n)?)?,
        Suite::AppendixA => verify_appendix_a(&opts.module(m, n)?)?,
        Suite::AppendixB => {
            let p = opts.charges()?.p;
            let set = if corrected { FormulaSet::Corrected } else { FormulaSet::Printed };
            verify_appendix_b(m, n, &p, set)?
        }
        Suite::AppendixC => verify_appendix_c(&opts.module(m, n)?)?,
        Suite::Prop33 => {
            if m < 2 || n < 2 {
                if opts.grid.is_some() {
                    return Ok(None);
                }
                return Err(Error::Parameter(format!("prop33 needs m, n >= 2, got ({m},{n})")));
            }
            prop33_report(m, n)?
        }
        Suite::Prop36 => {
            if m != n {
                if opts.grid.is_some() {
                    return Ok(None);
                }
                return Err(Error::Parameter(format!("prop36 needs m = n, got ({m},{n})")));
            }
            verify_prop36(n)?
        }
    }))
}

fn cmd_verify(ctx: &mut Ctx, suite: Suite, corrected: bool) -> Result<bool> {
    let mut total = SuiteReport::new(format!("{suite:?}"));
    for (m, n) in ctx.pairs() {
        let Some(rep) = run_suite(ctx, suite, corrected, m, n)? else { continue };
        for r in &rep.records {
            if ctx.is_json() {
                ctx.line(serde_json::to_string(r)?)?;
            } else if !r.pass {
                ctx.line(format!("FAIL {} {} {}: {} != {}", r.module, r.relation_id, r.vector_label, r.lhs, r.rhs))?;
            }
        }
        if !ctx.is_json() {
            ctx.line(format!(
                "{} K({m},{n}): {} checked, {} failed, {} skipped",
                rep.suite,
                rep.checked(),
                rep.failures().count(),
                rep.skipped
            ))?;
        }
        total.merge(rep);
    }
    let passed = total.passed();
    let summary = json!({
        "summary": true,
        "checked": total.checked(),
        "failed": total.failures().count(),
        "skipped": total.skipped,
        "pass": passed,
    });
    if ctx.is_json() {
        ctx.json(&summary)?;
    } else {
        ctx.line(if passed { "PASS" } else { "FAIL" })?;
    }
    if let Some(f) = total.failures().next() {
        eprintln!("first failure: {} on {} in {}: {} != {}", f.relation_id, f.vector_label, f.module, f.lhs, f.rhs);
    }
    Ok(passed)
}

fn emit_classification(ctx: &mut Ctx, r: &ClassificationResult) -> Result<()> {
    if ctx.is_json() {
        ctx.json(&r.to_json())
    } else {
        ctx.line(r.to_string())
    }
}

fn cmd_classify(ctx: &mut Ctx, mu: Option<&str>) -> Result<()> {
    let (m, n) = (ctx.opts.m, ctx.opts.n);
    let r = match ctx.opts.algebra {
        Algebra::G => {
            let (mu1, mu3) = match mu {
                Some(s) => {
                    let v: Vec<i64> = s
                        .split(',')
                        .map(|x| x.trim().parse().map_err(|_| Error::Parse(format!("bad --mu {s:?}"))))
                        .collect::<Result<_>>()?;
                    match v.as_slice() {
                        [a, b] => (*a, *b),
                        _ => return Err(Error::Parse(format!("--mu needs two integers, got {s:?}"))),
                    }
                }
                None => (m as i64, n as i64 + 2),
            };
            classify_g(mu1, mu3)?
        }
        Algebra::Psl => classify_psl(m, n)?,
        Algebra::Sl => classify_sl2(m, n, &ctx.opts.c_value()?)?,
    };
    emit_classification(ctx, &r)
}

fn cmd_hom(ctx: &mut Ctx, left: &str, right: &str) -> Result<()> {
    let a = named_module(left)?;
    let b = named_module(right)?;
    let hom = hom_space(&a, &b)?;
    let inv = hom.has_invertible_representative();
    if ctx.is_json() {
        ctx.json(&json!({"left": a.name, "right": b.name, "dim": hom.dim(), "invertible": inv}))
    } else {
        let tail = if hom.dim() == 0 {
            String::new()
        } else if inv {
            ", invertible".into()
        } else {
            ", not invertible".into()
        };
        ctx.line(format!("Hom({}, {}): dim Hom = {}{tail}", a.name, b.name, hom.dim()))
    }
}

fn cmd_twist(ctx: &mut Ctx) -> Result<bool> {
    let g = ctx.opts.sl2()?;
    let module = ctx.opts.module(ctx.opts.m, ctx.opts.n)?;
    let twisted = twist_module(&module, &g)?;
    let expected = twist_charges(&module.charges, &g);
    let structure = twisted.verify_structure().passed();
    let hom_dim = hom_space(&module, &twisted)?.dim();
    let ok = structure && twisted.charges == expected && expected.discriminant() == module.charges.discriminant();
    let ch = |c: &CentralCharges| json!({"c": format_rational(&c.c), "k": format_rational(&c.k), "p": format_rational(&c.p)});
    if ctx.is_json() {
        ctx.json(&json!({
            "module": module.name,
            "sl2": g.to_string(),
            "charges": ch(&module.charges),
            "twisted_charges": ch(&twisted.charges),
            "discriminant": format_rational(&module.charges.discriminant()),
            "twisted_discriminant": format_rational(&twisted.charges.discriminant()),
            "structure": structure,
            "hom_dim": hom_dim,
        }))?;
    } else {
        ctx.line(format!("{} twisted by {g}", module.name))?;
        ctx.line(format!("  charges {} -> {}", module.charges, twisted.charges))?;
        ctx.line(format!(
            "  c² - kp: {} -> {}",
            display_rational(&module.charges.discriminant()),
            display_rational(&twisted.charges.discriminant())
        ))?;
        ctx.line(format!("  brackets {}", if structure { "ok" } else { "FAIL" }))?;
        ctx.line(format!("  dim Hom(original, twisted) = {hom_dim}"))?;
    }
    Ok(ok)
}

fn dispatch(cli: Cli) -> Result<bool> {
    let out: Box<dyn Write> = match &cli.opts.out {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout())),
    };
    let mut ctx = Ctx { opts: cli.opts, out };
    let ok = match &cli.command {
        Command::Dims => cmd_dims(&mut ctx).map(|_| true),
        Command::Build => cmd_build(&mut ctx),
        Command::ExportJson => cmd_export(&mut ctx).map(|_| true),
        Command::Decompose => cmd_decompose(&mut ctx).map(|_| true),
        Command::Invariants => cmd_invariants(&mut ctx).map(|_| true),
        Command::Verify { suite, corrected } => cmd_verify(&mut ctx, *suite, *corrected),
        Command::Classify { mu } => cmd_classify(&mut ctx, mu.as_deref()).map(|_| true),
        Command::Hom { left, right } => cmd_hom(&mut ctx, left, right).map(|_| true),
        Command::Twist => cmd_twist(&mut ctx),
    };
    ctx.out.flush()?;
    ok
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(cli) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_command() {
        for args in [
            vec!["psl22", "dims", "--m", "2", "--n", "1"],
            vec!["psl22", "verify", "appendix-b", "--m", "2", "--n", "3"],
            vec!["psl22", "classify", "--algebra", "sl", "--m", "2", "--n", "1", "--c", "1/2"],
            vec!["psl22", "hom", "--left", "S:1", "--right", "T:2"],
            vec!["psl22", "twist", "--m", "1", "--n", "2", "--sl2", "1,1,0,1"],
            vec!["psl22", "export-json", "--charges", "-1/2,0,1", "--out", "x.json"],
        ] {
            Cli::try_parse_from(args.clone()).unwrap_or_else(|e| panic!("{args:?}: {e}"));
        }
    }

    #[test]
    fn named_modules() {
        assert_eq!(named_module("S:1").unwrap().dim(), 48);
        assert_eq!(named_module("K:1,0").unwrap().dim(), 32);
        assert!(named_module("Q:1").is_err());
    }
}
