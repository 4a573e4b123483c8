//! Property suites over the corpus. Each suite counts checks and failures,
//! tracks named maximum residuals against tolerances, and keeps the first
//! failure as a JSON witness. The CLI and the acceptance target share them.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::StructureAlgebra;
use crate::center::{center_valued_check, generalized_center, sharp_projection, verify_center_tensor};
use crate::characters::GroupAlgebra;
use crate::corpus::{
    corpus_groups, default_corpus, random_subspace, random_subspace_of_rank, random_subspace_within,
    random_vector, CorpusEntry,
};
use crate::error::Result;
use crate::group::{GroupTable, NamedGroup};
use crate::lie::{
    canonical_lie_ideal, classify_lie_ideal, discrete_lie_criterion, discrete_lie_criterion_on, is_ideal,
    is_lie_ideal, lie_ideal_witness, span_of_central_indicator, Witness,
};
use crate::linalg::GramAccumulator;
use crate::scalar::{axpy, clamp_noise, max_abs_diff, norm_inf, norm_l1, unit_vector, Tolerances, C64, ONE, ZERO};
use crate::subspace::Subspace;
use crate::tensor::GeneralizedAlgebra;

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Random instances per corpus entry; suites that call for a thousand
    /// samples use ten times this.
    pub trials: usize,
    pub tol: Tolerances,
    pub corpus: Vec<CorpusEntry>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            trials: 100,
            tol: Tolerances::default(),
            corpus: default_corpus(),
        }
    }
}

impl SuiteConfig {
    /// Independent stream per `(suite, item)` so results do not depend on
    /// iteration order elsewhere.
    fn rng(&self, suite: u64, item: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream((suite << 32) | item as u64);
        rng
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Residual {
    pub max: f64,
    pub tolerance: f64,
}

impl Residual {
    pub fn within(&self) -> bool {
        self.max <= self.tolerance
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: usize,
    pub failures: usize,
    pub residuals: BTreeMap<String, Residual>,
    pub details: BTreeMap<String, Value>,
    pub witness: Option<Value>,
}

impl SuiteReport {
    pub fn new(suite: &str) -> Self {
        Self {
            suite: suite.to_string(),
            passed: true,
            checks: 0,
            failures: 0,
            residuals: BTreeMap::new(),
            details: BTreeMap::new(),
            witness: None,
        }
    }

    /// Track `max(value)` under `name`; NaN counts as a failure.
    pub fn residual(&mut self, name: &str, value: f64, tolerance: f64) {
        let value = if value.is_nan() { f64::INFINITY } else { value };
        let e = self
            .residuals
            .entry(name.to_string())
            .or_insert(Residual { max: 0.0, tolerance });
        e.max = e.max.max(value);
    }

    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }

    pub fn detail(&mut self, key: &str, value: impl Serialize) {
        self.details
            .insert(key.to_string(), serde_json::to_value(value).unwrap_or(Value::Null));
    }

    fn count(&mut self, key: &str) {
        let e = self.details.entry(key.to_string()).or_insert(json!(0));
        *e = json!(e.as_u64().unwrap_or(0) + 1);
    }

    pub fn finish(mut self) -> Self {
        self.passed = self.failures == 0 && self.residuals.values().all(Residual::within);
        self
    }

    /// Fold `other` into `self` under a name prefix.
    pub fn absorb(&mut self, other: SuiteReport) {
        self.checks += other.checks;
        self.failures += other.failures;
        for (k, r) in other.residuals {
            self.residual(&format!("{}.{k}", other.suite), r.max, r.tolerance);
        }
        for (k, v) in other.details {
            self.details.insert(format!("{}.{k}", other.suite), v);
        }
        if self.witness.is_none() {
            self.witness = other.witness;
        }
    }
}

/// Nonzero coordinates of `v` keyed by basis label.
pub fn labelled(alg: &StructureAlgebra, v: &[C64]) -> Value {
    let mut m = serde_json::Map::new();
    for (i, z) in v.iter().enumerate() {
        let z = clamp_noise(*z);
        if z != ZERO && z.norm() > 1e-12 {
            m.insert(alg.labels()[i].clone(), json!([z.re, z.im]));
        }
    }
    Value::Object(m)
}

pub fn witness_json(alg: &StructureAlgebra, w: &Witness) -> Value {
    json!({
        "row": w.row,
        "element": labelled(alg, &w.element),
        "group_element": w.group_element,
        "basis": w.basis,
        "image": labelled(alg, &w.image),
        "residual": w.residual,
    })
}

fn named(spec: &str) -> Result<GroupTable> {
    GroupTable::named(spec.parse::<NamedGroup>()?)
}

fn idx(g: &GroupTable, label: &str) -> usize {
    g.index_of(label)
        .unwrap_or_else(|| panic!("group has no element labelled {label}"))
}

fn combo(n: usize, terms: &[(usize, f64)]) -> Vec<C64> {
    let mut v = vec![ZERO; n];
    for &(x, c) in terms {
        v[x] += C64::new(c, 0.0);
    }
    v
}

/// `span{[b_i, b_j]}`
pub fn commutator_subspace(alg: &StructureAlgebra, tol: Tolerances) -> Subspace {
    let d = alg.dim();
    let mut rows = Vec::new();
    for i in 0..d {
        let bi = unit_vector(d, i);
        for j in (i + 1)..d {
            let c = alg.commutator_with_basis(&bi, j);
            if norm_inf(&c) > 0.0 {
                rows.push(c);
            }
        }
    }
    Subspace::from_rows_with(alg, rows, tol)
}

/// Smallest two-sided ideal containing `s`.
pub fn ideal_closure(alg: &StructureAlgebra, s: &Subspace) -> Subspace {
    let mut cur = s.clone();
    loop {
        let mut rows = cur.basis().to_vec();
        for v in cur.basis() {
            for b in 0..alg.dim() {
                rows.push(alg.left_mul_basis(b, v));
                rows.push(alg.right_mul_basis(v, b));
            }
        }
        let next = Subspace::from_rows_with(alg, rows, cur.tolerances());
        if next.rank() == cur.rank() {
            return next;
        }
        cur = next;
    }
}

// ---------------------------------------------------------------------------
// Example suites

/// Conjugacy classes and character table of `D6`.
pub fn d6_golden(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("d6-golden");
    let ga = GroupAlgebra::with_tolerances(named("dihedral:6")?, cfg.seed, cfg.tol)?;
    let g = ga.group();
    let classes: Vec<Vec<String>> = g
        .conjugacy_classes()
        .iter()
        .map(|c| c.iter().map(|&x| g.label(x).to_string()).collect())
        .collect();
    let expected = vec![vec!["e"], vec!["r", "r^2"], vec!["s", "rs", "r^2s"]];
    rep.check(classes == expected, || json!({ "classes": classes }));
    let t = ga.table();
    rep.check(t.degrees() == [1, 1, 2], || json!({ "degrees": t.degrees() }));
    let chi3 = [2.0, -1.0, 0.0];
    let diff = (0..3)
        .map(|i| (t.value(2, i) - C64::new(chi3[i], 0.0)).norm())
        .fold(0.0, f64::max);
    rep.residual("degree_two_character", diff, cfg.tol.member);
    rep.residual("orthogonality", t.orthogonality_residual(), cfg.tol.member);
    rep.detail("classes", &classes);
    rep.detail("degrees", t.degrees());
    rep.detail("table", t.to_file());
    Ok(rep.finish())
}

/// The three-dimensional Lie ideal of `ℂ[D6]` that is not an ideal.
pub fn d6_lie_ideal_example(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("ex2-6");
    let ga = GroupAlgebra::with_tolerances(named("dihedral:6")?, cfg.seed, cfg.tol)?;
    let g = ga.group();
    let (r, r2, s, rs, r2s) = (idx(g, "r"), idx(g, "r^2"), idx(g, "s"), idx(g, "rs"), idx(g, "r^2s"));
    let l = ga.span_rows(vec![
        combo(6, &[(r, 1.0), (r2, -1.0)]),
        combo(6, &[(s, 1.0), (r2s, -1.0)]),
        combo(6, &[(rs, 1.0), (r2s, -1.0)]),
    ]);
    let j = ga.table().degrees().iter().position(|&n| n == 2).unwrap_or(0);
    let sl = ga.sl_block(j);
    rep.check(sl.equals(&l)?, || json!({ "sl_block_rank": sl.rank() }));
    let lie = lie_ideal_witness(ga.algebra(), &l)?;
    rep.check(lie.is_none(), || {
        json!({ "lie_ideal_witness": witness_json(ga.algebra(), lie.as_ref().unwrap()) })
    });
    let ideal = is_ideal(ga.algebra(), &l)?;
    rep.check(!ideal, || json!({ "is_ideal": true }));
    let c = classify_lie_ideal(&ga, &l)?;
    rep.check(c.delta == [0, 0, 1], || json!({ "delta": c.delta }));
    rep.check(c.central_part.is_zero(), || json!({ "central_part_rank": c.central_part.rank() }));
    rep.detail("is_lie_ideal", c.is_lie_ideal);
    rep.detail("is_ideal", ideal);
    rep.detail("delta", &c.delta);
    rep.detail("central_part_rank", c.central_part.rank());
    rep.detail("sl_block_rank", sl.rank());
    Ok(rep.finish())
}

/// The subspace of `ℂ[D6×D6]` that passes the translation test on each
/// factor but is not a Lie ideal.
pub fn product_translation_example(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("ex3-6");
    let d6 = named("dihedral:6")?;
    let p = GroupTable::direct_product(&d6, &d6)?;
    let t = GeneralizedAlgebra::with_tolerances(p, StructureAlgebra::complex(), cfg.tol)?;
    let (e, r, r2, s, rs, r2s) = (
        idx(&d6, "e"),
        idx(&d6, "r"),
        idx(&d6, "r^2"),
        idx(&d6, "s"),
        idx(&d6, "rs"),
        idx(&d6, "r^2s"),
    );
    let at = |x: usize, y: usize| x * 6 + y;
    let n = 36;
    let l = t.span_rows(vec![
        combo(n, &[(at(r, e), 1.0), (at(r2, e), -1.0)]),
        combo(n, &[(at(s, e), 1.0), (at(r2s, e), -1.0)]),
        combo(n, &[(at(rs, e), 1.0), (at(r2s, e), -1.0)]),
    ]);
    let factors: Vec<usize> = (0..6).map(|x| at(x, e)).chain((0..6).map(|y| at(e, y))).collect();
    let one_sided = discrete_lie_criterion_on(&t, &l, &factors)?;
    rep.check(one_sided.is_none(), || {
        json!({ "factor_witness": witness_json(t.algebra(), one_sided.as_ref().unwrap()) })
    });
    let full = discrete_lie_criterion(&t, &l)?;
    rep.check(full.is_some(), || json!({ "criterion": "unexpectedly holds" }));
    let lie = lie_ideal_witness(t.algebra(), &l)?;
    rep.check(lie.is_some(), || json!({ "is_lie_ideal": "unexpectedly true" }));

    let f = combo(
        n,
        &[
            (at(r, e), 1.0),
            (at(r2, e), -1.0),
            (at(s, e), 1.0),
            (at(r2s, e), -2.0),
            (at(rs, e), 1.0),
        ],
    );
    let comm = t.algebra().commutator_with_basis(&f, at(r, r));
    let expected = combo(n, &[(at(rs, r), -3.0), (at(s, r), 3.0)]);
    rep.residual("commutator_with_rr", max_abs_diff(&comm, &expected), cfg.tol.assoc);
    rep.check(!l.contains_vec(&comm), || json!({ "commutator_in_l": true }));
    rep.detail("commutator_with_rr", labelled(t.algebra(), &comm));
    if let Some(w) = &lie {
        rep.detail("lie_ideal_witness", witness_json(t.algebra(), w));
    }
    if let Some(w) = &full {
        rep.detail("criterion_witness", witness_json(t.algebra(), w));
    }
    Ok(rep.finish())
}

// ---------------------------------------------------------------------------
// Character theory

/// Wedderburn data of `ℂ[G]` for every group of the corpus.
pub fn idempotents(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("idempotents");
    let tol = cfg.tol.member;
    let mut degrees = serde_json::Map::new();
    for spec in corpus_groups(&cfg.corpus) {
        let ga = GroupAlgebra::with_tolerances(named(&spec)?, cfg.seed, cfg.tol)?;
        let n = ga.group().order();
        let k = ga.num_blocks();
        let t = ga.table();
        degrees.insert(spec.clone(), json!(t.degrees()));
        rep.residual("orthogonality", t.orthogonality_residual(), tol);

        let mut total = vec![ZERO; n];
        for w in ga.idempotents() {
            axpy(ONE, w.coeffs(), &mut total);
        }
        rep.residual("partition_of_unity", max_abs_diff(&total, &unit_vector(n, 0)), tol);
        for i in 0..k {
            let wi = ga.idempotent(i).coeffs();
            for j in 0..k {
                let p = ga.algebra().mul_slices(wi, ga.idempotent(j).coeffs());
                let target = if i == j { wi.to_vec() } else { vec![ZERO; n] };
                rep.residual("idempotent_products", max_abs_diff(&p, &target), tol);
            }
            for x in 0..n {
                rep.residual("centrality", norm_inf(&ga.algebra().commutator_with_basis(wi, x)), tol);
            }
        }
        let sq: usize = t.degrees().iter().map(|d| d * d).sum();
        rep.check(sq == n, || json!({ "group": spec, "degree_square_sum": sq }));

        let blocks: Vec<Subspace> = (0..k).map(|j| ga.minimal_ideal(j)).collect();
        for (j, b) in blocks.iter().enumerate() {
            let nj = t.degree(j);
            rep.check(b.rank() == nj * nj, || json!({ "group": spec, "block": j, "rank": b.rank() }));
            let sl = ga.sl_block(j);
            rep.check(sl.rank() == nj * nj - 1, || json!({ "group": spec, "sl_block": j, "rank": sl.rank() }));
            let meet = b.intersect(&ga.chi_kernel(j))?;
            let agree = meet.equals(&sl)?;
            rep.check(agree, || json!({ "group": spec, "sl_block": j, "constructions_differ": true }));
            for (i, c) in blocks.iter().enumerate().skip(j + 1) {
                let m = b.intersect(c)?.rank();
                rep.check(m == 0, || json!({ "group": spec, "blocks": [j, i], "intersection_rank": m }));
            }
        }
        let total_rank = blocks
            .iter()
            .try_fold(Subspace::zero(ga.algebra()), |acc, b| acc.sum(b))?
            .rank();
        rep.check(total_rank == n, || json!({ "group": spec, "sum_of_blocks_rank": total_rank }));

        let center = ga.algebra().center_with(&cfg.tol);
        let three_way = center.equals(&ga.idempotent_span())? && center.equals(&ga.class_sum_span())?;
        rep.check(three_way, || json!({ "group": spec, "center_rank": center.rank() }));
    }
    rep.detail("degrees", degrees);
    Ok(rep.finish())
}

/// Canonical ideals pass; random non-ideals break the sandwich; every
/// Lie ideal found satisfies it.
pub fn sandwich(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("thm2-4");
    for (gi, spec) in ["dihedral:6", "quaternion:8", "symmetric:4"].into_iter().enumerate() {
        let ga = GroupAlgebra::with_tolerances(named(spec)?, cfg.seed, cfg.tol)?;
        let alg = ga.algebra();
        let k = ga.num_blocks();
        let mut rng = cfg.rng(1, gi);
        let omega = ga.idempotent_span();
        let zero = Subspace::zero(alg);
        let mut centrals = vec![zero.clone(), omega.clone()];
        for rank in 1..k.min(3) {
            centrals.push(random_subspace_within(alg, &omega, &mut rng, rank));
        }
        for mask in 0..(1usize << k) {
            let blocks: Vec<usize> = (0..k).filter(|j| mask >> j & 1 == 1).collect();
            for c in &centrals {
                let l = canonical_lie_ideal(&ga, &blocks, c)?;
                let w = lie_ideal_witness(alg, &l)?;
                rep.check(w.is_none(), || {
                    json!({ "group": spec, "blocks": blocks, "witness": witness_json(alg, w.as_ref().unwrap()) })
                });
                classify_checked(&mut rep, &ga, &l, spec)?;
                rep.count("canonical");
            }
        }
        let sls: Vec<Subspace> = (0..k).map(|j| ga.sl_block(j)).collect();
        for trial in 0..cfg.trials * 10 {
            let l = match trial % 3 {
                0 => random_subspace(alg, &mut rng, cfg.tol),
                1 => {
                    // a canonical ideal plus one random direction
                    let mask = rng.random_range(0..(1usize << k));
                    let blocks: Vec<usize> = (0..k).filter(|j| mask >> j & 1 == 1).collect();
                    let base = canonical_lie_ideal(&ga, &blocks, &zero)?;
                    let extra = Subspace::from_rows_with(alg, vec![random_vector(&mut rng, alg.dim())], cfg.tol);
                    base.sum(&extra)?
                }
                _ => {
                    // part of one trace-zero block, plus central directions
                    let j = rng.random_range(0..k);
                    let part = if sls[j].rank() > 1 {
                        let rank = rng.random_range(1..sls[j].rank());
                        random_subspace_within(alg, &sls[j], &mut rng, rank)
                    } else {
                        random_subspace_within(alg, &sls[j], &mut rng, sls[j].rank())
                    };
                    let rank = rng.random_range(0..=k);
                    let c = random_subspace_within(alg, &omega, &mut rng, rank);
                    part.sum(&c)?
                }
            };
            classify_checked(&mut rep, &ga, &l, spec)?;
            rep.count("random");
        }
    }
    Ok(rep.finish())
}

fn classify_checked(rep: &mut SuiteReport, ga: &GroupAlgebra, l: &Subspace, spec: &str) -> Result<()> {
    match classify_lie_ideal(ga, l) {
        Ok(c) => {
            if c.is_lie_ideal {
                rep.count("lie_ideals");
            } else {
                rep.count("rejected");
            }
            // a rejected subspace must break the sandwich, an accepted one keep it
            rep.check(c.is_lie_ideal == c.sandwich.holds(), || {
                json!({
                    "group": spec,
                    "rank": l.rank(),
                    "is_lie_ideal": c.is_lie_ideal,
                    "delta": c.delta,
                    "lower": c.sandwich.lower,
                    "upper": c.sandwich.upper,
                })
            });
            Ok(())
        }
        Err(crate::error::Error::SandwichViolation(msg)) => {
            rep.check(false, || json!({ "group": spec, "sandwich_violation": msg }));
            Ok(())
        }
        Err(e) => Err(e),
    }
}

/// The four Lie ideals of `M_n`, `n = 2, 3`, and nothing else.
pub fn matrix_lie_ideals(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("herstein-mn");
    for n in [2usize, 3] {
        let a = StructureAlgebra::matrix_algebra(n)?;
        let d = n * n;
        let scalars = Subspace::from_rows_with(&a, vec![a.unit().expect("unital").to_vec()], cfg.tol);
        let mut sl_rows = Vec::new();
        for p in 0..n {
            for q in 0..n {
                if p != q {
                    sl_rows.push(unit_vector(d, p * n + q));
                }
            }
        }
        for p in 0..n - 1 {
            let mut v = unit_vector(d, p * n + p);
            v[(p + 1) * n + p + 1] = -ONE;
            sl_rows.push(v);
        }
        let sl = Subspace::from_rows_with(&a, sl_rows, cfg.tol);
        let four = [Subspace::zero(&a), scalars.clone(), sl.clone(), Subspace::whole(&a)];
        for (i, l) in four.iter().enumerate() {
            let ok = is_lie_ideal(&a, l)?;
            rep.check(ok, || json!({ "n": n, "canonical": i }));
        }
        let mut rng = cfg.rng(2, n);
        let mut passing = 0usize;
        for trial in 0..cfg.trials * 10 {
            let l = match trial % 3 {
                0 => random_subspace(&a, &mut rng, cfg.tol),
                1 => {
                    let rank = rng.random_range(1..d - 1);
                    random_subspace_within(&a, &sl, &mut rng, rank)
                }
                _ => {
                    let rank = rng.random_range(1..d - 1);
                    scalars.sum(&random_subspace_of_rank(&a, &mut rng, rank, cfg.tol))?
                }
            };
            if is_lie_ideal(&a, &l)? {
                passing += 1;
                let mut known = false;
                for c in &four {
                    known |= l.equals(c)?;
                }
                rep.check(known, || json!({ "n": n, "false_positive_rank": l.rank() }));
            } else {
                rep.checks += 1;
            }
        }
        rep.detail(&format!("m{n}_random_passing_canonical"), passing);
    }
    Ok(rep.finish())
}

// ---------------------------------------------------------------------------
// Generalized group algebras

fn entries_with_bound(cfg: &SuiteConfig, bound: usize) -> Result<Vec<(CorpusEntry, GeneralizedAlgebra)>> {
    let mut out = Vec::new();
    for e in &cfg.corpus {
        let (g, a) = e.build()?;
        if g.order() * a.dim() <= bound {
            out.push((e.clone(), GeneralizedAlgebra::with_tolerances(g, a, cfg.tol)?));
        }
    }
    Ok(out)
}

/// Subspaces of `A` that are Lie ideals by construction, plus two-sided
/// ideals and a few random subspaces.
fn coefficient_family(a: &StructureAlgebra, rng: &mut ChaCha8Rng, tol: Tolerances) -> Result<Vec<Subspace>> {
    let center = a.center_with(&tol);
    let comm = commutator_subspace(a, tol);
    let mut fam = vec![
        Subspace::zero(a),
        Subspace::whole(a),
        center.clone(),
        comm.clone(),
        comm.sum(&center)?,
    ];
    if center.rank() > 1 {
        fam.push(random_subspace_within(a, &center, rng, 1));
    }
    if comm.rank() > 0 && comm.rank() < a.dim() {
        let extra = Subspace::from_rows_with(a, vec![random_vector(rng, a.dim())], tol);
        fam.push(comm.sum(&extra)?);
    }
    for i in 0..a.dim() {
        let gen = Subspace::from_rows_with(a, vec![unit_vector(a.dim(), i)], tol);
        let id = ideal_closure(a, &gen);
        let mut seen = false;
        for f in &fam {
            seen |= f.equals(&id)?;
        }
        if !seen {
            fam.push(id);
        }
    }
    for _ in 0..3 {
        if a.dim() > 1 {
            let rank = rng.random_range(1..a.dim());
            fam.push(random_subspace_of_rank(a, rng, rank, tol));
        }
    }
    Ok(fam)
}

/// The translation criterion agrees with the direct commutator test.
pub fn criterion_equivalence(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("thm3-4");
    if cfg.trials == 0 {
        rep.detail("instances", 0);
        return Ok(rep.finish());
    }
    for (ei, (entry, t)) in entries_with_bound(cfg, 72)?.into_iter().enumerate() {
        let alg = t.algebra();
        let mut rng = cfg.rng(3, ei);
        let mut cases: Vec<Subspace> = Vec::new();
        let center = alg.center_with(&cfg.tol);
        let comm = commutator_subspace(alg, cfg.tol);
        cases.push(Subspace::zero(alg));
        cases.push(Subspace::whole(alg));
        cases.push(center.clone());
        cases.push(comm.clone());
        cases.push(comm.sum(&center)?);
        for f in coefficient_family(t.coeff(), &mut rng, cfg.tol)? {
            cases.push(t.lift(&f)?);
        }
        if t.coeff().is_unital() {
            if let Some(u) = t.coeff().unit() {
                cases.push(span_of_central_indicator(&t, u, None)?);
            }
        }
        if t.block() == 1 {
            let ga = GroupAlgebra::with_tolerances(t.group().clone(), cfg.seed, cfg.tol)?;
            for j in 0..ga.num_blocks() {
                cases.push(t.span_rows(ga.sl_block(j).basis().to_vec()));
            }
        }
        while cases.len() < 20 {
            let rank = rng.random_range(0..=center.rank());
            let c = random_subspace_within(alg, &center, &mut rng, rank);
            cases.push(if cases.len() % 2 == 0 { c.sum(&comm)? } else { c });
        }
        cases.truncate(20);
        for _ in 0..cfg.trials {
            cases.push(random_subspace(alg, &mut rng, cfg.tol));
        }
        for (ci, l) in cases.iter().enumerate() {
            let crit = discrete_lie_criterion(&t, l)?;
            let direct = lie_ideal_witness(alg, l)?;
            rep.check(crit.is_none() == direct.is_none(), || {
                json!({
                    "group": entry.group,
                    "algebra": entry.algebra,
                    "case": ci,
                    "criterion": crit.is_none(),
                    "is_lie_ideal": direct.is_none(),
                })
            });
            if direct.is_none() {
                rep.count("lie_ideals");
            }
            rep.count("instances");
        }
    }
    Ok(rep.finish())
}

/// Lifts `F̃` of subspaces of the coefficient algebra, and the
/// one-dimensional central indicator spans.
pub fn lifts(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("props3-8-10");
    let non_abelian = ["dihedral:6", "quaternion:8", "symmetric:4"];
    let two_sided_algebras = ["matrix:2", "sum:matrix:2+matrix:3"];
    for (ei, entry) in cfg.corpus.iter().enumerate() {
        let (g, a) = entry.build()?;
        let abelian = g.is_abelian();
        let t = GeneralizedAlgebra::with_tolerances(g, a, cfg.tol)?;
        let mut rng = cfg.rng(4, ei);
        let ideal_check = non_abelian.contains(&entry.group.as_str())
            && two_sided_algebras.contains(&entry.algebra.as_str());
        for f in coefficient_family(t.coeff(), &mut rng, cfg.tol)? {
            let lifted = t.lift(&f)?;
            rep.check(lifted.rank() == t.group().order() * f.rank(), || {
                json!({ "group": entry.group, "algebra": entry.algebra, "lift_rank": lifted.rank() })
            });
            let f_lie = is_lie_ideal(t.coeff(), &f)?;
            let lift_lie = is_lie_ideal(t.algebra(), &lifted)?;
            if abelian && f_lie {
                rep.check(lift_lie, || {
                    json!({ "forward": entry.group, "algebra": entry.algebra, "rank": f.rank() })
                });
                rep.count("forward");
            }
            if lift_lie {
                rep.check(f_lie, || {
                    json!({ "converse": entry.group, "algebra": entry.algebra, "rank": f.rank() })
                });
                rep.count("converse");
            }
            if ideal_check {
                let f_ideal = is_ideal(t.coeff(), &f)?;
                let lift_ideal = is_ideal(t.algebra(), &lifted)?;
                rep.check(lift_lie == f_ideal && f_ideal == lift_ideal, || {
                    json!({
                        "group": entry.group,
                        "algebra": entry.algebra,
                        "rank": f.rank(),
                        "lift_is_lie_ideal": lift_lie,
                        "is_ideal": f_ideal,
                        "lift_is_ideal": lift_ideal,
                    })
                });
                rep.count("two_sided");
            }
        }
        if let Some(unit) = t.coeff().unit().map(<[C64]>::to_vec) {
            if t.group().order() > 1 {
                let l = span_of_central_indicator(&t, &unit, None)?;
                let lie = is_lie_ideal(t.algebra(), &l)?;
                // any nonzero lift has rank at least |G|
                let not_a_lift = l.rank() == 1 && t.group().order() > 1;
                rep.check(lie && not_a_lift, || {
                    json!({ "indicator": entry.group, "algebra": entry.algebra, "is_lie_ideal": lie })
                });
                if let Some(class) = t.group().conjugacy_classes().iter().find(|c| c.len() > 1) {
                    let l = span_of_central_indicator(&t, &unit, Some(class))?;
                    let lie = is_lie_ideal(t.algebra(), &l)?;
                    rep.check(lie, || {
                        json!({ "class_indicator": entry.group, "algebra": entry.algebra })
                    });
                }
                rep.count("indicators");
            }
        }
    }
    Ok(rep.finish())
}

// ---------------------------------------------------------------------------
// Centers

/// Both center computations agree; for unital `A` the center is the
/// `Z(A)`-valued class functions; the trivial algebra breaks that.
pub fn center_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("thm4-8");
    let mut dims = serde_json::Map::new();
    for entry in &cfg.corpus {
        let (g, a) = entry.build()?;
        let t = GeneralizedAlgebra::with_tolerances(g, a, cfg.tol)?;
        let key = format!("{}|{}", entry.group, entry.algebra);
        let pair = match generalized_center(&t) {
            Ok(p) => p,
            Err(e @ crate::error::Error::CrossCheckMismatch(_)) => {
                rep.check(false, || json!({ "pair": key, "error": e.to_string() }));
                continue;
            }
            Err(e) => return Err(e),
        };
        rep.checks += 1;
        let z = &pair.structural;
        for v in z.basis() {
            rep.residual("cross_check", pair.translational.residual(v), cfg.tol.member);
            let ok = center_valued_check(&t, v);
            rep.check(ok, || json!({ "pair": key, "center_valued": false }));
        }
        let whole_cf = t.class_function_space(&Subspace::whole(t.coeff()))?;
        if t.coeff().is_unital() {
            let cf = t.class_function_space(t.coeff_center())?;
            let eq = z.equals(&cf)?;
            rep.check(eq, || json!({ "pair": key, "center_rank": z.rank(), "class_function_rank": cf.rank() }));
        } else {
            // non-unital: every function is central, only k·dim A are class functions
            let strict = z.rank() == t.dim() && whole_cf.rank() < t.dim();
            rep.check(strict || t.group().is_abelian(), || {
                json!({ "pair": key, "center_rank": z.rank(), "class_function_rank": whole_cf.rank() })
            });
        }
        dims.insert(key, json!([z.rank(), whole_cf.rank()]));
    }
    // the named counterexample
    let t = GeneralizedAlgebra::with_tolerances(
        named("dihedral:6")?,
        StructureAlgebra::trivial_algebra(2)?,
        cfg.tol,
    )?;
    let z = generalized_center(&t)?.structural.rank();
    let cf = t.class_function_space(&Subspace::whole(t.coeff()))?.rank();
    rep.check(z == 12 && cf == 6, || json!({ "trivial_counterexample": [z, cf] }));
    rep.detail("trivial_counterexample", [z, cf]);
    rep.detail("center_and_class_function_ranks", dims);
    Ok(rep.finish())
}

/// Center of `ℂ[G]⊗A` against `Z(ℂ[G])⊗Z(A)` for unital `A`.
pub fn center_tensor_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("thm4-12");
    let mut reports = serde_json::Map::new();
    for entry in &cfg.corpus {
        let (g, a) = entry.build()?;
        if !a.is_unital() {
            continue;
        }
        let t = GeneralizedAlgebra::with_tolerances(g, a, cfg.tol)?;
        let key = format!("{}|{}", entry.group, entry.algebra);
        let r = verify_center_tensor(&t)?;
        rep.residual("discrepancy", r.discrepancy_norm, cfg.tol.member);
        let ok = r.equal_as_subspaces && r.sharp_is_projection && r.dim_center == r.dim_predicted;
        rep.check(ok, || json!({ "pair": key, "report": r }));
        reports.insert(key, serde_json::to_value(&r).unwrap_or(Value::Null));
    }
    rep.detail("reports", reports);
    Ok(rep.finish())
}

/// The conjugation average: idempotent, an ℓ¹ contraction, fixing exactly
/// the class functions, and mapping `Z(A)`-valued functions onto the center.
pub fn sharp_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("sharp");
    let samples = (cfg.trials * 10).max(1);
    for (ei, entry) in cfg.corpus.iter().enumerate() {
        let (g, a) = entry.build()?;
        let t = GeneralizedAlgebra::with_tolerances(g, a, cfg.tol)?;
        let key = format!("{}|{}", entry.group, entry.algebra);
        let mut rng = cfg.rng(5, ei);
        let n = t.dim();
        for s in 0..samples {
            let f = random_vector(&mut rng, n);
            let sf = sharp_projection(&t, &f);
            if s < 100 {
                let ssf = sharp_projection(&t, &sf);
                rep.residual("idempotence", max_abs_diff(&sf, &ssf), cfg.tol.assoc);
            }
            let (l1f, l1s) = (norm_l1(&f), norm_l1(&sf));
            rep.residual("l1_contraction", (l1s - l1f).max(0.0), cfg.tol.assoc * l1f.max(1.0));
        }

        // range and fixed points against the class functions
        let class_functions = t.class_function_space(&Subspace::whole(t.coeff()))?;
        let mut fixed = GramAccumulator::new(n);
        let mut columns = Vec::with_capacity(n);
        let mut images = Vec::with_capacity(n);
        for k in 0..n {
            let e = unit_vector(n, k);
            let s = sharp_projection(&t, &e);
            let col: Vec<(usize, C64)> = s
                .iter()
                .zip(&e)
                .enumerate()
                .map(|(i, (a, b))| (i, a - b))
                .filter(|(_, v)| *v != ZERO)
                .collect();
            columns.push(col);
            images.push(s);
        }
        fixed.add_columns(n, &columns);
        let fixed = t.span_rows(fixed.null_space(cfg.tol.rank));
        let range = t.span_rows(images);
        let ok = fixed.equals(&class_functions)? && range.equals(&class_functions)?;
        rep.check(ok, || {
            json!({ "pair": key, "fixed": fixed.rank(), "range": range.rank(), "class_functions": class_functions.rank() })
        });

        if t.coeff().is_unital() {
            let center = generalized_center(&t)?.structural;
            let mut rows = Vec::new();
            for x in 0..t.group().order() {
                for z in t.coeff_center().basis() {
                    rows.push(sharp_projection(&t, &t.embed(x, z)));
                }
            }
            let image = t.span_rows(rows);
            let eq = image.equals(&center)?;
            rep.check(eq, || json!({ "pair": key, "image": image.rank(), "center": center.rank() }));
        }
    }
    rep.detail("samples_per_pair", samples);
    Ok(rep.finish())
}

/// Suites addressable from the command line, with descriptive aliases.
pub const SUITES: [(&str, &str); 9] = [
    ("herstein-mn", "matrix-lie-ideals"),
    ("thm2-4", "sandwich"),
    ("thm3-4", "criterion"),
    ("ex2-6", "d6-example"),
    ("ex3-6", "d6xd6-example"),
    ("props3-8-10", "lifts"),
    ("thm4-8", "class-functions"),
    ("thm4-12", "center-tensor"),
    ("sharp", "sharp"),
];

/// Canonical suite name for a name or alias.
pub fn resolve_suite(name: &str) -> Option<&'static str> {
    SUITES
        .iter()
        .find(|(n, alias)| *n == name || *alias == name)
        .map(|(n, _)| *n)
}

pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<SuiteReport> {
    let merged = |name: &str, parts: Vec<SuiteReport>| {
        let mut rep = SuiteReport::new(name);
        for p in parts {
            rep.absorb(p);
        }
        rep.finish()
    };
    match resolve_suite(name) {
        Some("herstein-mn") => matrix_lie_ideals(cfg),
        Some("thm2-4") => Ok(merged("thm2-4", vec![idempotents(cfg)?, sandwich(cfg)?])),
        Some("thm3-4") => criterion_equivalence(cfg),
        Some("ex2-6") => Ok(merged("ex2-6", vec![d6_golden(cfg)?, d6_lie_ideal_example(cfg)?])),
        Some("ex3-6") => product_translation_example(cfg),
        Some("props3-8-10") => lifts(cfg),
        Some("thm4-8") => center_suite(cfg),
        Some("thm4-12") => center_tensor_suite(cfg),
        Some("sharp") => sharp_suite(cfg),
        _ => Err(crate::error::Error::Malformed(format!("unknown suite `{name}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SuiteConfig {
        SuiteConfig {
            trials: 2,
            corpus: crate::corpus::parse_corpus(
                r#"[{"group":"cyclic:2","algebra":"matrix:2"},
                    {"group":"dihedral:6","algebra":"complex"},
                    {"group":"dihedral:6","algebra":"trivial:2"}]"#,
            )
            .unwrap(),
            ..SuiteConfig::default()
        }
    }

    #[test]
    fn examples_pass() {
        let cfg = small();
        assert!(d6_golden(&cfg).unwrap().passed);
        assert!(d6_lie_ideal_example(&cfg).unwrap().passed);
        assert!(product_translation_example(&cfg).unwrap().passed);
    }

    #[test]
    fn small_suites_pass() {
        let cfg = small();
        for name in ["herstein-mn", "thm3-4", "props3-8-10", "thm4-8", "thm4-12", "sharp"] {
            let r = run_suite(name, &cfg).unwrap();
            assert!(r.passed, "{name}: {:?}", r.witness);
            assert!(r.checks > 0, "{name}");
        }
    }

    #[test]
    fn zero_trials_is_vacuous() {
        let cfg = SuiteConfig {
            trials: 0,
            ..small()
        };
        let r = criterion_equivalence(&cfg).unwrap();
        assert!(r.passed);
        assert_eq!(r.checks, 0);
    }

    #[test]
    fn aliases_resolve() {
        assert_eq!(resolve_suite("criterion"), Some("thm3-4"));
        assert_eq!(resolve_suite("ex3-6"), Some("ex3-6"));
        assert_eq!(resolve_suite("nope"), None);
    }

    #[test]
    fn failures_are_recorded() {
        let mut r = SuiteReport::new("x");
        r.residual("a", 1.0, 0.5);
        r.check(true, || json!(null));
        let r = r.finish();
        assert!(!r.passed);
        let mut r = SuiteReport::new("y");
        r.check(false, || json!({"w": 1}));
        let r = r.finish();
        assert!(!r.passed);
        assert_eq!(r.witness, Some(json!({"w": 1})));
    }
}
