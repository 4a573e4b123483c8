//! The default verification corpus and seeded random test data.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraSpec, StructureAlgebra};
use crate::error::{Error, Result};
use crate::group::{GroupTable, NamedGroup};
use crate::scalar::{Tolerances, C64};
use crate::subspace::Subspace;

/// One `(G, A)` pair, both as spec strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub group: String,
    pub algebra: String,
}

impl CorpusEntry {
    pub fn group_spec(&self) -> Result<NamedGroup> {
        self.group.parse()
    }

    pub fn algebra_spec(&self) -> Result<AlgebraSpec> {
        self.algebra.parse()
    }

    pub fn build(&self) -> Result<(GroupTable, StructureAlgebra)> {
        Ok((GroupTable::named(self.group_spec()?)?, self.algebra_spec()?.build()?))
    }
}

pub const DEFAULT_GROUPS: [&str; 12] = [
    "cyclic:1",
    "cyclic:2",
    "cyclic:3",
    "cyclic:4",
    "cyclic:5",
    "cyclic:6",
    "dihedral:6",
    "dihedral:8",
    "quaternion:8",
    "symmetric:3",
    "symmetric:4",
    "alternating:4",
];

pub const DEFAULT_ALGEBRAS: [&str; 5] = [
    "complex",
    "matrix:2",
    "sum:matrix:2+matrix:3",
    "group:cyclic:3",
    "trivial:2",
];

/// Every default group paired with every default algebra, group-major.
pub fn default_corpus() -> Vec<CorpusEntry> {
    DEFAULT_GROUPS
        .iter()
        .flat_map(|g| {
            DEFAULT_ALGEBRAS.iter().map(move |a| CorpusEntry {
                group: g.to_string(),
                algebra: a.to_string(),
            })
        })
        .collect()
}

/// Distinct groups of a corpus, in first-appearance order.
pub fn corpus_groups(corpus: &[CorpusEntry]) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for e in corpus {
        if !out.contains(&e.group) {
            out.push(e.group.clone());
        }
    }
    out
}

/// Parse a corpus override: a JSON list of `{"group": _, "algebra": _}`.
pub fn parse_corpus(json: &str) -> Result<Vec<CorpusEntry>> {
    let entries: Vec<CorpusEntry> =
        serde_json::from_str(json).map_err(|e| Error::Malformed(format!("corpus: {e}")))?;
    for e in &entries {
        e.group_spec()?;
        e.algebra_spec()?;
    }
    Ok(entries)
}

/// Standard complex Gaussian scalar.
pub fn gaussian(rng: &mut ChaCha8Rng) -> C64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    C64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

pub fn random_vector(rng: &mut ChaCha8Rng, dim: usize) -> Vec<C64> {
    (0..dim).map(|_| gaussian(rng)).collect()
}

/// Span of `rank` Gaussian vectors.
pub fn random_subspace_of_rank(
    alg: &StructureAlgebra,
    rng: &mut ChaCha8Rng,
    rank: usize,
    tol: Tolerances,
) -> Subspace {
    let rows = (0..rank).map(|_| random_vector(rng, alg.dim())).collect();
    Subspace::from_rows_with(alg, rows, tol)
}

/// Gaussian span with dimension uniform in `0..=dim`.
pub fn random_subspace(alg: &StructureAlgebra, rng: &mut ChaCha8Rng, tol: Tolerances) -> Subspace {
    let rank = rng.random_range(0..=alg.dim());
    random_subspace_of_rank(alg, rng, rank, tol)
}

/// Gaussian span of vectors drawn from inside `within`.
pub fn random_subspace_within(
    alg: &StructureAlgebra,
    within: &Subspace,
    rng: &mut ChaCha8Rng,
    rank: usize,
) -> Subspace {
    let rows = (0..rank)
        .map(|_| {
            let mut v = vec![C64::new(0.0, 0.0); alg.dim()];
            for b in within.basis() {
                crate::scalar::axpy(gaussian(rng), b, &mut v);
            }
            v
        })
        .collect();
    Subspace::from_rows_with(alg, rows, within.tolerances())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn default_corpus_builds() {
        let c = default_corpus();
        assert_eq!(c.len(), 60);
        for e in &c {
            let (g, a) = e.build().unwrap();
            assert!(g.order() * a.dim() <= 24 * 13);
        }
        assert_eq!(corpus_groups(&c).len(), 12);
    }

    #[test]
    fn corpus_override() {
        let c = parse_corpus(r#"[{"group":"dihedral:6","algebra":"matrix:2"}]"#).unwrap();
        assert_eq!(c.len(), 1);
        assert!(parse_corpus(r#"[{"group":"nope","algebra":"complex"}]"#).is_err());
        assert!(parse_corpus("{}").is_err());
    }

    #[test]
    fn random_data_is_seeded() {
        let a = StructureAlgebra::matrix_algebra(2).unwrap();
        let s1 = random_subspace(&a, &mut ChaCha8Rng::seed_from_u64(3), Tolerances::default());
        let s2 = random_subspace(&a, &mut ChaCha8Rng::seed_from_u64(3), Tolerances::default());
        assert_eq!(s1.basis(), s2.basis());
        let s = random_subspace_of_rank(&a, &mut ChaCha8Rng::seed_from_u64(1), 3, Tolerances::default());
        assert_eq!(s.rank(), 3);
    }
}
