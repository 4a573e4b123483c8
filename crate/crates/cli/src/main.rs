//! `galg`: build groups and algebras, compute character tables and
//! centers, and check Lie-ideal properties, emitting a JSON run report.
//!
//! Exit codes: 0 when the checked property holds, 1 on a counterexample or
//! residual failure (witness on stderr), 2 on usage or input errors.

mod inputs;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use galg_core::center::{
    center_valued_check, generalized_center, sharp_projection, verify_center_tensor,
};
use galg_core::corpus::{default_corpus, parse_corpus};
use galg_core::lie::{
    canonical_lie_ideal, classify_lie_ideal, discrete_lie_criterion, ideal_witness, lie_ideal_witness,
};
use galg_core::scalar::{max_abs_diff, norm_l1};
use galg_core::verify::{labelled, run_suite, witness_json, SuiteConfig};
use galg_core::{
    AlgebraSpec, GeneralizedAlgebra, GroupAlgebra, StructureAlgebra, Subspace, Tolerances,
};
use serde_json::{json, Value};

use inputs::Inputs;
use report::{RunReport, Verdict};

#[derive(Parser, Debug)]
#[command(name = "galg", version, about = "Verification pipelines for finite group algebras")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Seed for every random choice
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Random instances per corpus entry for `verify`
    #[arg(long, global = true, default_value_t = 100)]
    trials: usize,
    /// Multiplies every tolerance
    #[arg(long, global = true, default_value_t = 1.0)]
    tolerance_scale: f64,
    /// Also write the JSON report here
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// JSON list of {"group": .., "algebra": ..} replacing the default corpus
    #[arg(long, global = true)]
    corpus: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Order, conjugacy classes and center of a group
    Group {
        /// Spec such as `dihedral:6` or a JSON group file
        group: String,
    },
    /// Character table, central idempotents and block dimensions
    Chartable { group: String },
    /// Run a named property suite over the corpus
    Verify {
        /// herstein-mn, thm2-4, thm3-4, ex2-6, ex3-6, props3-8-10, thm4-8,
        /// thm4-12, sharp (or their aliases)
        suite: String,
    },
    /// Lie ideal checks
    #[command(subcommand)]
    Lie(LieCommand),
    /// Centers of generalized group algebras
    #[command(subcommand)]
    Center(CenterCommand),
}

#[derive(Subcommand, Debug)]
enum LieCommand {
    /// Is the subspace a Lie ideal, and is it a two-sided ideal
    Check {
        #[arg(long)]
        subspace: PathBuf,
        /// Overrides the algebra named in the subspace file
        #[arg(long)]
        algebra: Option<String>,
    },
    /// Block pattern and central part of a subspace of C[G]
    Classify {
        #[arg(long)]
        subspace: PathBuf,
        /// Overrides the group named in the subspace file
        #[arg(long)]
        group: Option<String>,
    },
    /// Sum of trace-zero blocks and central idempotents
    Canonical {
        #[arg(long)]
        group: String,
        /// Character index whose trace-zero block is included (repeatable)
        #[arg(long, value_delimiter = ',')]
        blocks: Vec<usize>,
        /// Character index whose idempotent spans the central part (repeatable)
        #[arg(long, value_delimiter = ',')]
        central: Vec<usize>,
        /// Write the subspace file here
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Lift a subspace of A to the A-valued functions taking values in it
    Lift {
        #[arg(long)]
        group: String,
        #[arg(long)]
        coeff: String,
        #[arg(long)]
        subspace: PathBuf,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Translation criterion for a subspace of C[G]⊗A
    Criterion {
        #[arg(long)]
        subspace: PathBuf,
        #[arg(long, requires = "coeff")]
        group: Option<String>,
        #[arg(long, requires = "group")]
        coeff: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum CenterCommand {
    /// Center of C[G]⊗A, computed two ways
    Compute {
        #[arg(long)]
        group: String,
        #[arg(long, default_value = "complex")]
        coeff: String,
    },
    /// Conjugation average of an element
    Sharp {
        #[arg(long)]
        group: String,
        #[arg(long, default_value = "complex")]
        coeff: String,
        /// JSON list of [re, im] coordinates
        #[arg(long)]
        element: PathBuf,
    },
    /// Compare the center with Z(C[G])⊗Z(A)
    VerifyTensor {
        #[arg(long)]
        group: String,
        #[arg(long)]
        coeff: String,
    },
}

struct Ctx {
    seed: u64,
    trials: usize,
    tol: Tolerances,
    corpus: Option<PathBuf>,
    inputs: Inputs,
}

/// A failed computation that should still produce a report.
#[derive(Debug)]
struct Numerical(galg_core::Error);

impl std::fmt::Display for Numerical {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

impl std::error::Error for Numerical {}

/// Numerical breakdowns are failures (exit 1); everything else is an input
/// error (exit 2).
fn core(e: galg_core::Error) -> anyhow::Error {
    use galg_core::Error::*;
    match e {
        DegenerateSpectrum
        | OrthogonalityFailure { .. }
        | SandwichViolation(_)
        | CrossCheckMismatch(_) => anyhow!(Numerical(e)),
        other => anyhow!(other),
    }
}

trait CoreResult<T> {
    fn core(self) -> Result<T>;
}

impl<T> CoreResult<T> for galg_core::Result<T> {
    fn core(self) -> Result<T> {
        self.map_err(core)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if !(cli.global.tolerance_scale.is_finite() && cli.global.tolerance_scale > 0.0) {
        eprintln!("error: --tolerance-scale must be a positive number");
        return ExitCode::from(2);
    }
    let mut ctx = Ctx {
        seed: cli.global.seed,
        trials: cli.global.trials,
        tol: Tolerances::scaled(cli.global.tolerance_scale),
        corpus: cli.global.corpus.clone(),
        inputs: Inputs::default(),
    };
    let name = command_name(&cli.command);
    let outcome = dispatch(&cli.command, &mut ctx);
    let report = match outcome {
        Ok(mut r) => {
            r.inputs = std::mem::take(&mut ctx.inputs.digests);
            r
        }
        Err(e) => {
            let numerical = e.downcast_ref::<Numerical>().is_some();
            eprintln!("{}", json!({ "error": format!("{e:#}") }));
            if !numerical {
                return ExitCode::from(2);
            }
            let mut r = RunReport::new(&name, ctx.seed);
            r.inputs = std::mem::take(&mut ctx.inputs.digests);
            r.results = json!({ "error": e.to_string() });
            r.verdict = Verdict::Fail;
            r
        }
    };
    let text = report.to_json();
    println!("{text}");
    if let Some(path) = &cli.global.out {
        if let Err(e) = std::fs::write(path, format!("{text}\n")) {
            eprintln!("error: writing {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    match report.verdict {
        Verdict::Pass => ExitCode::SUCCESS,
        Verdict::Fail => {
            if let Some(w) = report.results.get("witness").filter(|w| !w.is_null()) {
                eprintln!("{}", json!({ "witness": w }));
            }
            ExitCode::from(1)
        }
    }
}

fn command_name(c: &Command) -> String {
    match c {
        Command::Group { .. } => "group".into(),
        Command::Chartable { .. } => "chartable".into(),
        Command::Verify { suite } => format!("verify {suite}"),
        Command::Lie(l) => match l {
            LieCommand::Check { .. } => "lie check",
            LieCommand::Classify { .. } => "lie classify",
            LieCommand::Canonical { .. } => "lie canonical",
            LieCommand::Lift { .. } => "lie lift",
            LieCommand::Criterion { .. } => "lie criterion",
        }
        .into(),
        Command::Center(c) => match c {
            CenterCommand::Compute { .. } => "center compute",
            CenterCommand::Sharp { .. } => "center sharp",
            CenterCommand::VerifyTensor { .. } => "center verify-tensor",
        }
        .into(),
    }
}

fn dispatch(c: &Command, ctx: &mut Ctx) -> Result<RunReport> {
    let name = command_name(c);
    let mut r = RunReport::new(&name, ctx.seed);
    match c {
        Command::Group { group } => cmd_group(ctx, &mut r, group)?,
        Command::Chartable { group } => cmd_chartable(ctx, &mut r, group)?,
        Command::Verify { suite } => cmd_verify(ctx, &mut r, suite)?,
        Command::Lie(l) => match l {
            LieCommand::Check { subspace, algebra } => lie_check(ctx, &mut r, subspace, algebra.as_deref())?,
            LieCommand::Classify { subspace, group } => lie_classify(ctx, &mut r, subspace, group.as_deref())?,
            LieCommand::Canonical {
                group,
                blocks,
                central,
                emit,
            } => lie_canonical(ctx, &mut r, group, blocks, central, emit.as_deref())?,
            LieCommand::Lift {
                group,
                coeff,
                subspace,
                emit,
            } => lie_lift(ctx, &mut r, group, coeff, subspace, emit.as_deref())?,
            LieCommand::Criterion {
                subspace,
                group,
                coeff,
            } => lie_criterion(ctx, &mut r, subspace, group.as_deref(), coeff.as_deref())?,
        },
        Command::Center(cc) => match cc {
            CenterCommand::Compute { group, coeff } => center_compute(ctx, &mut r, group, coeff)?,
            CenterCommand::Sharp { group, coeff, element } => center_sharp(ctx, &mut r, group, coeff, element)?,
            CenterCommand::VerifyTensor { group, coeff } => center_tensor(ctx, &mut r, group, coeff)?,
        },
    }
    Ok(r)
}

fn cmd_group(ctx: &mut Ctx, r: &mut RunReport, arg: &str) -> Result<()> {
    let (g, _) = inputs::group(&mut ctx.inputs, "group", arg)?;
    let classes: Vec<Vec<&str>> = g
        .conjugacy_classes()
        .iter()
        .map(|c| c.iter().map(|&x| g.label(x)).collect())
        .collect();
    let center: Vec<&str> = g.center().into_iter().map(|x| g.label(x)).collect();
    let singletons = g.conjugacy_classes().iter().filter(|c| c.len() == 1).count();
    r.results = json!({
        "order": g.order(),
        "num_classes": g.num_classes(),
        "class_sizes": g.conjugacy_classes().iter().map(Vec::len).collect::<Vec<_>>(),
        "classes": classes,
        "center": center,
        "is_abelian": g.is_abelian(),
        "group": g.to_file(),
    });
    r.settle(center.len() == singletons);
    Ok(())
}

fn cmd_chartable(ctx: &mut Ctx, r: &mut RunReport, arg: &str) -> Result<()> {
    let (g, _) = inputs::group(&mut ctx.inputs, "group", arg)?;
    let ga = GroupAlgebra::with_tolerances(g, ctx.seed, ctx.tol).core()?;
    let t = ga.table();
    let n = ga.group().order();
    let tol = ctx.tol.member;
    r.residual("row_orthogonality", t.row_orthogonality_residual(), tol);
    r.residual("column_orthogonality", t.column_orthogonality_residual(), tol);
    let mut total = vec![galg_core::scalar::ZERO; n];
    for w in ga.idempotents() {
        galg_core::scalar::axpy(galg_core::scalar::ONE, w.coeffs(), &mut total);
    }
    r.residual(
        "partition_of_unity",
        max_abs_diff(&total, &galg_core::scalar::unit_vector(n, 0)),
        tol,
    );
    for i in 0..ga.num_blocks() {
        for j in 0..ga.num_blocks() {
            let p = ga.algebra().mul_slices(ga.idempotent(i).coeffs(), ga.idempotent(j).coeffs());
            let target = if i == j {
                ga.idempotent(i).coeffs().to_vec()
            } else {
                vec![galg_core::scalar::ZERO; n]
            };
            r.residual("idempotent_products", max_abs_diff(&p, &target), tol);
        }
    }
    let block_dims: Vec<usize> = (0..ga.num_blocks()).map(|j| ga.minimal_ideal(j).rank()).collect();
    let expected: Vec<usize> = t.degrees().iter().map(|d| d * d).collect();
    r.results = json!({
        "table": t.to_file(),
        "class_reps": t.class_reps().iter().map(|&x| ga.group().label(x)).collect::<Vec<_>>(),
        "idempotents": ga.idempotents().iter().map(|w| labelled(ga.algebra(), w.coeffs())).collect::<Vec<_>>(),
        "block_dims": block_dims,
    });
    r.settle(block_dims == expected);
    Ok(())
}

fn cmd_verify(ctx: &mut Ctx, r: &mut RunReport, suite: &str) -> Result<()> {
    let corpus = match &ctx.corpus {
        Some(path) => {
            let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
            ctx.inputs.record("corpus", &bytes);
            parse_corpus(std::str::from_utf8(&bytes)?)?
        }
        None => default_corpus(),
    };
    if galg_core::verify::resolve_suite(suite).is_none() {
        bail!("unknown suite `{suite}`");
    }
    ctx.inputs.record("suite", suite.as_bytes());
    let cfg = SuiteConfig {
        seed: ctx.seed,
        trials: ctx.trials,
        tol: ctx.tol,
        corpus,
    };
    let rep = run_suite(suite, &cfg).core()?;
    for (k, v) in &rep.residuals {
        r.residual(k, v.max, v.tolerance);
    }
    let passed = rep.passed;
    r.results = json!({
        "suite": rep.suite,
        "checks": rep.checks,
        "failures": rep.failures,
        "details": rep.details,
        "witness": rep.witness,
    });
    r.settle(passed);
    Ok(())
}

/// The algebra for a subspace file: `--algebra` if given, else the file's
/// own reference.
fn resolve_algebra(
    ctx: &mut Ctx,
    file: &galg_core::subspace::SubspaceFile,
    arg: Option<&str>,
) -> Result<(StructureAlgebra, Option<AlgebraSpec>)> {
    match arg {
        Some(a) => {
            let (alg, reference) = inputs::algebra(&mut ctx.inputs, "algebra", a)?;
            let spec = reference.as_str().and_then(|s| s.parse().ok());
            Ok((alg, spec))
        }
        None => inputs::referenced_algebra(&file.algebra),
    }
}

fn lie_check(ctx: &mut Ctx, r: &mut RunReport, path: &Path, algebra: Option<&str>) -> Result<()> {
    let file = inputs::subspace_file(&mut ctx.inputs, "subspace", path)?;
    let (alg, _) = resolve_algebra(ctx, &file, algebra)?;
    let l = inputs::subspace(&alg, &file, ctx.tol)?;
    let lie = lie_ideal_witness(&alg, &l).core()?;
    let ideal = ideal_witness(&alg, &l).core()?;
    r.results = json!({
        "rank": l.rank(),
        "dim": alg.dim(),
        "is_lie_ideal": lie.is_none(),
        "is_ideal": ideal.is_none(),
        "witness": lie.as_ref().map(|w| witness_json(&alg, w)),
    });
    r.settle(lie.is_none());
    Ok(())
}

fn group_of_subspace(ctx: &mut Ctx, file: &galg_core::subspace::SubspaceFile, arg: Option<&str>) -> Result<GroupAlgebra> {
    let g = match arg {
        Some(a) => inputs::group(&mut ctx.inputs, "group", a)?.0,
        None => match file.algebra.as_str().map(str::parse::<AlgebraSpec>) {
            Some(Ok(AlgebraSpec::Group(spec))) => galg_core::GroupTable::named(spec)?,
            _ => bail!("subspace file does not name a group algebra `group:<spec>`; pass --group"),
        },
    };
    GroupAlgebra::with_tolerances(g, ctx.seed, ctx.tol).core()
}

fn lie_classify(ctx: &mut Ctx, r: &mut RunReport, path: &Path, group: Option<&str>) -> Result<()> {
    let file = inputs::subspace_file(&mut ctx.inputs, "subspace", path)?;
    let ga = group_of_subspace(ctx, &file, group)?;
    let l = inputs::subspace(ga.algebra(), &file, ctx.tol)?;
    let c = classify_lie_ideal(&ga, &l).core()?;
    r.results = json!({
        "rank": l.rank(),
        "is_lie_ideal": c.is_lie_ideal,
        "delta": c.delta,
        "degrees": ga.table().degrees(),
        "central_part_rank": c.central_part.rank(),
        "central_part": c.central_part.to_file(file.algebra.clone()),
        "sandwich": c.sandwich,
        "witness": c.witness.as_ref().map(|w| witness_json(ga.algebra(), w)),
    });
    r.settle(c.is_lie_ideal);
    Ok(())
}

fn emit(path: Option<&Path>, s: &Subspace, reference: Value) -> Result<()> {
    if let Some(p) = path {
        let text = serde_json::to_string_pretty(&s.to_file(reference))?;
        std::fs::write(p, text).with_context(|| format!("writing {}", p.display()))?;
    }
    Ok(())
}

fn lie_canonical(
    ctx: &mut Ctx,
    r: &mut RunReport,
    group: &str,
    blocks: &[usize],
    central: &[usize],
    out: Option<&Path>,
) -> Result<()> {
    let (g, reference) = inputs::group(&mut ctx.inputs, "group", group)?;
    let ga = GroupAlgebra::with_tolerances(g, ctx.seed, ctx.tol).core()?;
    let k = ga.num_blocks();
    if let Some(&j) = blocks.iter().chain(central).find(|&&j| j >= k) {
        bail!("character index {j} out of range, the group has {k} characters");
    }
    let c = ga.span_rows(central.iter().map(|&j| ga.idempotent(j).coeffs().to_vec()).collect());
    let l = canonical_lie_ideal(&ga, blocks, &c).core()?;
    let lie = lie_ideal_witness(ga.algebra(), &l).core()?;
    let algebra_ref = match reference {
        Value::String(s) => Value::String(format!("group:{s}")),
        _ => serde_json::to_value(ga.algebra().to_file())?,
    };
    emit(out, &l, algebra_ref.clone())?;
    let expected: usize = blocks
        .iter()
        .map(|&j| ga.table().degree(j).pow(2) - 1)
        .sum::<usize>()
        + c.rank();
    r.results = json!({
        "rank": l.rank(),
        "expected_rank": expected,
        "is_lie_ideal": lie.is_none(),
        "subspace": l.to_file(algebra_ref),
        "witness": lie.as_ref().map(|w| witness_json(ga.algebra(), w)),
    });
    r.settle(lie.is_none() && l.rank() == expected);
    Ok(())
}

fn tensor_reference(group_ref: &Value, coeff_ref: &Value, t: &GeneralizedAlgebra) -> Result<Value> {
    Ok(match (group_ref, coeff_ref) {
        (Value::String(g), Value::String(a)) => Value::String(format!("tensor:{g}@{a}")),
        _ => serde_json::to_value(t.algebra().to_file())?,
    })
}

fn lie_lift(
    ctx: &mut Ctx,
    r: &mut RunReport,
    group: &str,
    coeff: &str,
    path: &Path,
    out: Option<&Path>,
) -> Result<()> {
    let (g, gref) = inputs::group(&mut ctx.inputs, "group", group)?;
    let (a, aref) = inputs::algebra(&mut ctx.inputs, "coeff", coeff)?;
    let file = inputs::subspace_file(&mut ctx.inputs, "subspace", path)?;
    let t = GeneralizedAlgebra::with_tolerances(g, a, ctx.tol).core()?;
    let f = inputs::subspace(t.coeff(), &file, ctx.tol)?;
    let lifted = t.lift(&f).core()?;
    let tref = tensor_reference(&gref, &aref, &t)?;
    emit(out, &lifted, tref.clone())?;
    let lift_lie = lie_ideal_witness(t.algebra(), &lifted).core()?;
    let f_lie = lie_ideal_witness(t.coeff(), &f).core()?.is_none();
    let f_ideal = ideal_witness(t.coeff(), &f).core()?.is_none();
    r.results = json!({
        "rank": f.rank(),
        "lift_rank": lifted.rank(),
        "group_is_abelian": t.group().is_abelian(),
        "is_lie_ideal_of_coeff": f_lie,
        "is_ideal_of_coeff": f_ideal,
        "lift_is_lie_ideal": lift_lie.is_none(),
        "subspace": lifted.to_file(tref),
        "witness": lift_lie.as_ref().map(|w| witness_json(t.algebra(), w)),
    });
    r.settle(lift_lie.is_none());
    Ok(())
}

fn lie_criterion(
    ctx: &mut Ctx,
    r: &mut RunReport,
    path: &Path,
    group: Option<&str>,
    coeff: Option<&str>,
) -> Result<()> {
    let file = inputs::subspace_file(&mut ctx.inputs, "subspace", path)?;
    let t = match (group, coeff) {
        (Some(g), Some(a)) => {
            let (g, _) = inputs::group(&mut ctx.inputs, "group", g)?;
            let (a, _) = inputs::algebra(&mut ctx.inputs, "coeff", a)?;
            GeneralizedAlgebra::with_tolerances(g, a, ctx.tol).core()?
        }
        _ => match file.algebra.as_str().map(str::parse::<AlgebraSpec>) {
            Some(Ok(AlgebraSpec::Tensor(g, a))) => {
                GeneralizedAlgebra::with_tolerances(galg_core::GroupTable::named(g)?, a.build()?, ctx.tol).core()?
            }
            Some(Ok(AlgebraSpec::Group(g))) => GeneralizedAlgebra::with_tolerances(
                galg_core::GroupTable::named(g)?,
                StructureAlgebra::complex(),
                ctx.tol,
            )
            .core()?,
            _ => bail!("subspace file does not name `tensor:<group>@<algebra>`; pass --group and --coeff"),
        },
    };
    let l = inputs::subspace(t.algebra(), &file, ctx.tol)?;
    let crit = discrete_lie_criterion(&t, &l).core()?;
    let direct = lie_ideal_witness(t.algebra(), &l).core()?;
    let agree = crit.is_none() == direct.is_none();
    r.results = json!({
        "rank": l.rank(),
        "criterion_holds": crit.is_none(),
        "is_lie_ideal": direct.is_none(),
        "agree": agree,
        "witness": crit.as_ref().map(|w| witness_json(t.algebra(), w)),
    });
    r.settle(crit.is_none() && agree);
    Ok(())
}

fn tensor(ctx: &mut Ctx, group: &str, coeff: &str) -> Result<(GeneralizedAlgebra, Value)> {
    let (g, gref) = inputs::group(&mut ctx.inputs, "group", group)?;
    let (a, aref) = inputs::algebra(&mut ctx.inputs, "coeff", coeff)?;
    let t = GeneralizedAlgebra::with_tolerances(g, a, ctx.tol).core()?;
    let tref = tensor_reference(&gref, &aref, &t)?;
    Ok((t, tref))
}

fn center_compute(ctx: &mut Ctx, r: &mut RunReport, group: &str, coeff: &str) -> Result<()> {
    let (t, tref) = tensor(ctx, group, coeff)?;
    let pair = generalized_center(&t).core()?;
    let z = &pair.structural;
    let mut cross: f64 = 0.0;
    for v in z.basis() {
        cross = cross.max(pair.translational.residual(v));
    }
    for v in pair.translational.basis() {
        cross = cross.max(z.residual(v));
    }
    r.residual("cross_check", cross, ctx.tol.member);
    let center_valued = z.basis().iter().all(|v| center_valued_check(&t, v));
    let class_functions = if t.coeff().is_unital() {
        Some(t.class_function_space(t.coeff_center()).core()?)
    } else {
        None
    };
    let matches_class_functions = match &class_functions {
        Some(cf) => Some(z.equals(cf).core()?),
        None => None,
    };
    r.results = json!({
        "dim": t.dim(),
        "dim_center": z.rank(),
        "dim_translation_system": pair.translational.rank(),
        "coeff_center_dim": t.coeff_center().rank(),
        "num_classes": t.group().num_classes(),
        "center_valued": center_valued,
        "equals_class_functions": matches_class_functions,
        "center": z.to_file(tref),
    });
    r.settle(center_valued && matches_class_functions != Some(false));
    Ok(())
}

fn center_sharp(ctx: &mut Ctx, r: &mut RunReport, group: &str, coeff: &str, element: &Path) -> Result<()> {
    let (t, _) = tensor(ctx, group, coeff)?;
    let f = inputs::element(&mut ctx.inputs, "element", element, t.dim())?;
    let s = sharp_projection(&t, &f);
    let ss = sharp_projection(&t, &s);
    r.residual("idempotence", max_abs_diff(&s, &ss), ctx.tol.assoc);
    let (l1f, l1s) = (norm_l1(&f), norm_l1(&s));
    r.residual("l1_growth", (l1s - l1f).max(0.0), ctx.tol.assoc * l1f.max(1.0));
    let cf = t.class_function_space(&Subspace::whole(t.coeff())).core()?;
    r.residual("class_function_residual", cf.residual(&s), ctx.tol.member);
    r.results = json!({
        "sharp": s.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>(),
        "l1_norm": l1f,
        "l1_norm_sharp": l1s,
        "center_valued": center_valued_check(&t, &s),
    });
    r.settle(true);
    Ok(())
}

fn center_tensor(ctx: &mut Ctx, r: &mut RunReport, group: &str, coeff: &str) -> Result<()> {
    let (t, _) = tensor(ctx, group, coeff)?;
    let rep = verify_center_tensor(&t).core()?;
    r.residual("discrepancy", rep.discrepancy_norm, ctx.tol.member);
    let ok = rep.equal_as_subspaces && rep.sharp_is_projection && rep.dim_center == rep.dim_predicted;
    r.results = serde_json::to_value(&rep)?;
    r.settle(ok);
    Ok(())
}
