//! Finite groups given by Cayley tables.
//!
//! Every constructor funnels through the same validation: the table must be
//! a Latin square with a two-sided identity and inverses, and associative
//! (exhaustively up to [`EXHAUSTIVE_ASSOC_BOUND`], sampled beyond). The
//! identity is always stored at index 0 and conjugacy classes are computed
//! once at construction, ordered by least member.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest order produced by closure or named constructions (|S7|).
pub const DEFAULT_MAX_ORDER: usize = 5040;
/// Orders up to this bound get an exhaustive associativity check.
pub const EXHAUSTIVE_ASSOC_BOUND: usize = 256;
const SAMPLED_ASSOC_TRIPLES: usize = 10_000;

#[derive(Debug, Clone, PartialEq)]
pub struct GroupTable {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<usize>,
    labels: Vec<String>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl GroupTable {
    /// Validate a Cayley table. `table[a][b]` is the index of `a·b`.
    pub fn from_cayley_table(table: &[Vec<usize>], labels: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::Malformed("empty Cayley table".into()));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Malformed(format!(
                    "row {a} has length {}, expected {n}",
                    row.len()
                )));
            }
            for (b, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::Malformed(format!(
                        "entry ({a}, {b}) = {v} is out of range"
                    )));
                }
                flat.push(v as u32);
            }
        }
        Self::from_flat(n, flat, labels)
    }

    fn from_flat(n: usize, mut mul: Vec<u32>, labels: Option<Vec<String>>) -> Result<Self> {
        let mut labels = match labels {
            Some(l) if l.len() != n => {
                return Err(Error::Malformed(format!(
                    "{} labels supplied for {n} elements",
                    l.len()
                )))
            }
            Some(l) => l,
            None => (0..n).map(|i| format!("g{i}")).collect(),
        };

        check_latin(n, &mul)?;

        let at = |m: &[u32], a: usize, b: usize| m[a * n + b] as usize;
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| at(&mul, e, x) == x && at(&mul, x, e) == x))
            .ok_or(Error::NoIdentity)?;

        if identity != 0 {
            let swap = |a: usize| match a {
                0 => identity,
                a if a == identity => 0,
                a => a,
            };
            let mut relabeled = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    relabeled[swap(a) * n + swap(b)] = swap(at(&mul, a, b)) as u32;
                }
            }
            mul = relabeled;
            labels.swap(0, identity);
        }

        let mut inv = vec![usize::MAX; n];
        for x in 0..n {
            let y = (0..n)
                .find(|&y| at(&mul, x, y) == 0)
                .ok_or(Error::NoInverse { element: x })?;
            if at(&mul, y, x) != 0 {
                return Err(Error::NoInverse { element: x });
            }
            inv[x] = y;
        }

        check_associative(n, &mul)?;

        let (classes, class_of) = compute_classes(n, &mul, &inv);
        Ok(Self {
            order: n,
            mul,
            inv,
            labels,
            classes,
            class_of,
        })
    }

    /// Group generated by permutations of `{0..degree-1}`, with the default
    /// order bound. Composition is `(p·q)(i) = p(q(i))`; elements are
    /// numbered in breadth-first discovery order from the identity.
    pub fn from_permutation_generators(degree: usize, gens: &[Vec<usize>]) -> Result<Self> {
        Self::from_permutation_generators_bounded(degree, gens, DEFAULT_MAX_ORDER)
    }

    pub fn from_permutation_generators_bounded(
        degree: usize,
        gens: &[Vec<usize>],
        max_order: usize,
    ) -> Result<Self> {
        if degree == 0 {
            return Err(Error::Malformed("permutation degree must be positive".into()));
        }
        for (k, g) in gens.iter().enumerate() {
            if !is_permutation(g, degree) {
                return Err(Error::Malformed(format!(
                    "generator {k} is not a permutation of {degree} points"
                )));
            }
        }
        let gens: Vec<Vec<u16>> = gens
            .iter()
            .map(|g| g.iter().map(|&v| v as u16).collect())
            .collect();
        let identity: Vec<u16> = (0..degree as u16).collect();
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Vec<u16>, usize> = HashMap::from([(identity, 0)]);
        let mut head = 0;
        while head < elements.len() {
            for g in &gens {
                let p = compose(&elements[head], g);
                if !index.contains_key(&p) {
                    if elements.len() == max_order {
                        return Err(Error::OrderBoundExceeded {
                            order: max_order + 1,
                            bound: max_order,
                        });
                    }
                    index.insert(p.clone(), elements.len());
                    elements.push(p);
                }
            }
            head += 1;
        }
        Self::from_permutations(&elements, &index)
    }

    fn from_permutations(elements: &[Vec<u16>], index: &HashMap<Vec<u16>, usize>) -> Result<Self> {
        let n = elements.len();
        let mut mul = Vec::with_capacity(n * n);
        let mut scratch = vec![0u16; elements[0].len()];
        for a in elements {
            for b in elements {
                for (s, &bi) in scratch.iter_mut().zip(b) {
                    *s = a[bi as usize];
                }
                mul.push(index[&scratch] as u32);
            }
        }
        let labels = elements.iter().map(|p| cycle_notation(p)).collect();
        Self::from_flat(n, mul, Some(labels))
    }

    pub fn named(family: NamedGroup) -> Result<Self> {
        family.build(DEFAULT_MAX_ORDER)
    }

    /// `G × H`, elements ordered lexicographically: `(g, h)` has index
    /// `g·|H| + h`.
    pub fn direct_product(g: &GroupTable, h: &GroupTable) -> Result<Self> {
        let n = g.order * h.order;
        if n > DEFAULT_MAX_ORDER {
            return Err(Error::OrderBoundExceeded {
                order: n,
                bound: DEFAULT_MAX_ORDER,
            });
        }
        let hn = h.order;
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let (ga, ha) = (a / hn, a % hn);
                let (gb, hb) = (b / hn, b % hn);
                mul.push((g.mul(ga, gb) * hn + h.mul(ha, hb)) as u32);
            }
        }
        let labels = (0..n)
            .map(|a| format!("({},{})", g.labels[a / hn], h.labels[a % hn]))
            .collect();
        Self::from_flat(n, mul, Some(labels))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `g x g⁻¹`
    #[inline]
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv[g])
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Conjugacy classes, sorted by least member; the identity class is
    /// first and each class is sorted ascending.
    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    /// The modular function of a finite group, identically 1.
    pub fn modular_constant(&self) -> f64 {
        1.0
    }

    pub fn is_abelian(&self) -> bool {
        self.classes.len() == self.order
    }

    /// Elements commuting with everything, computed directly from the table.
    pub fn center(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&x| (0..self.order).all(|y| self.mul(x, y) == self.mul(y, x)))
            .collect()
    }

    /// Size of the centralizer of `x`.
    pub fn centralizer_order(&self, x: usize) -> usize {
        (0..self.order)
            .filter(|&y| self.mul(x, y) == self.mul(y, x))
            .count()
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    pub fn to_file(&self) -> GroupFile {
        GroupFile {
            order: self.order,
            mul: self.table(),
            labels: Some(self.labels.clone()),
        }
    }

    pub fn from_file(file: &GroupFile) -> Result<Self> {
        if file.order != file.mul.len() {
            return Err(Error::Malformed(format!(
                "declared order {} but table has {} rows",
                file.order,
                file.mul.len()
            )));
        }
        Self::from_cayley_table(&file.mul, file.labels.clone())
    }
}

/// On-disk group format: `{ "order": n, "mul": [[...]], "labels": [...] }`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupFile {
    pub order: usize,
    pub mul: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

fn check_latin(n: usize, mul: &[u32]) -> Result<()> {
    let mut seen = vec![usize::MAX; n];
    for a in 0..n {
        for b in 0..n {
            let v = mul[a * n + b] as usize;
            if seen[v] == a {
                return Err(Error::NotLatinSquare(format!("row {a} repeats entry {v}")));
            }
            seen[v] = a;
        }
    }
    seen.fill(usize::MAX);
    for b in 0..n {
        for a in 0..n {
            let v = mul[a * n + b] as usize;
            if seen[v] == b {
                return Err(Error::NotLatinSquare(format!(
                    "column {b} repeats entry {v}"
                )));
            }
            seen[v] = b;
        }
    }
    Ok(())
}

fn check_associative(n: usize, mul: &[u32]) -> Result<()> {
    let at = |a: usize, b: usize| mul[a * n + b] as usize;
    let check = |a: usize, b: usize, c: usize| {
        if at(at(a, b), c) != at(a, at(b, c)) {
            Err(Error::NotAssociative { a, b, c })
        } else {
            Ok(())
        }
    };
    if n <= EXHAUSTIVE_ASSOC_BOUND {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    check(a, b, c)?;
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for _ in 0..SAMPLED_ASSOC_TRIPLES {
            check(
                rng.random_range(0..n),
                rng.random_range(0..n),
                rng.random_range(0..n),
            )?;
        }
    }
    Ok(())
}

fn compute_classes(n: usize, mul: &[u32], inv: &[usize]) -> (Vec<Vec<usize>>, Vec<usize>) {
    let at = |a: usize, b: usize| mul[a * n + b] as usize;
    let mut class_of = vec![usize::MAX; n];
    let mut classes = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members = Vec::new();
        for g in 0..n {
            let y = at(at(g, x), inv[g]);
            if class_of[y] == usize::MAX {
                class_of[y] = id;
                members.push(y);
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    (classes, class_of)
}

fn is_permutation(p: &[usize], degree: usize) -> bool {
    if p.len() != degree {
        return false;
    }
    let mut seen = vec![false; degree];
    p.iter().all(|&v| v < degree && !std::mem::replace(&mut seen[v], true))
}

fn compose(p: &[u16], q: &[u16]) -> Vec<u16> {
    q.iter().map(|&i| p[i as usize]).collect()
}

fn cycle_notation(p: &[u16]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        out.push('(');
        let mut i = start;
        let mut first = true;
        while !seen[i] {
            seen[i] = true;
            if !first {
                out.push(' ');
            }
            out.push_str(&i.to_string());
            first = false;
            i = p[i] as usize;
        }
        out.push(')');
    }
    if out.is_empty() {
        "e".into()
    } else {
        out
    }
}

/// Lexicographically ordered permutations of `{0..n-1}`; only the even ones
/// when `even_only`.
fn lex_permutations(n: usize, even_only: bool) -> Vec<Vec<u16>> {
    let mut current: Vec<u16> = (0..n as u16).collect();
    let mut out = Vec::new();
    loop {
        if !even_only || parity(&current) == 0 {
            out.push(current.clone());
        }
        // next permutation in lexicographic order
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
    out
}

fn parity(p: &[u16]) -> usize {
    let mut seen = vec![false; p.len()];
    let mut transpositions = 0;
    for s in 0..p.len() {
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = p[i] as usize;
            len += 1;
        }
        if len > 0 {
            transpositions += len - 1;
        }
    }
    transpositions % 2
}

fn factorial_within(n: usize, bound: usize) -> Option<usize> {
    (1..=n).try_fold(1usize, |acc, k| {
        let v = acc.checked_mul(k)?;
        (v <= bound).then_some(v)
    })
}

/// Named families. Element orderings:
///
/// * `Cyclic(n)`: `g^k` at index `k`.
/// * `Dihedral(2n)`: `r^i s^j` at index `i + n·j`, so order 6 is
///   `e, r, r², s, rs, r²s` with `s r s = r⁻¹`.
/// * `Symmetric(n)` / `Alternating(n)`: permutations in lexicographic order
///   of their one-line notation.
/// * `Quaternion`: `1, -1, i, -i, j, -j, k, -k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NamedGroup {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Quaternion,
    Product(Vec<NamedGroup>),
}

impl NamedGroup {
    pub fn build(&self, max_order: usize) -> Result<GroupTable> {
        match *self {
            NamedGroup::Cyclic(n) => {
                check_bound(n, max_order)?;
                if n == 0 {
                    return Err(Error::Malformed("cyclic group order must be positive".into()));
                }
                let mul = (0..n)
                    .flat_map(|a| (0..n).map(move |b| ((a + b) % n) as u32))
                    .collect();
                let labels = (0..n)
                    .map(|k| match k {
                        0 => "e".to_string(),
                        1 => "g".to_string(),
                        k => format!("g^{k}"),
                    })
                    .collect();
                GroupTable::from_flat(n, mul, Some(labels))
            }
            NamedGroup::Dihedral(order) => {
                if order < 2 || order % 2 != 0 {
                    return Err(Error::Malformed(format!(
                        "dihedral group order must be even and positive, got {order}"
                    )));
                }
                check_bound(order, max_order)?;
                let n = order / 2;
                let decode = |a: usize| (a % n, a / n);
                let mut mul = Vec::with_capacity(order * order);
                for a in 0..order {
                    for b in 0..order {
                        let (i, j) = decode(a);
                        let (k, l) = decode(b);
                        // r^i s^j r^k s^l = r^(i ± k) s^(j + l)
                        let rot = if j == 0 { (i + k) % n } else { (i + n - k) % n };
                        mul.push((rot + n * ((j + l) % 2)) as u32);
                    }
                }
                let labels = (0..order)
                    .map(|a| {
                        let (i, j) = decode(a);
                        let r = match i {
                            0 => String::new(),
                            1 => "r".into(),
                            i => format!("r^{i}"),
                        };
                        match (r.is_empty(), j) {
                            (true, 0) => "e".into(),
                            (_, 0) => r,
                            (_, _) => format!("{r}s"),
                        }
                    })
                    .collect();
                GroupTable::from_flat(order, mul, Some(labels))
            }
            NamedGroup::Symmetric(n) | NamedGroup::Alternating(n) => {
                if n == 0 {
                    return Err(Error::Malformed("permutation degree must be positive".into()));
                }
                let even = matches!(self, NamedGroup::Alternating(_));
                let full = factorial_within(n, max_order * if even { 2 } else { 1 })
                    .ok_or(Error::OrderBoundExceeded {
                        order: usize::MAX,
                        bound: max_order,
                    })?;
                let order = if even && n > 1 { full / 2 } else { full };
                check_bound(order, max_order)?;
                let elements = lex_permutations(n, even);
                let index = elements
                    .iter()
                    .enumerate()
                    .map(|(i, p)| (p.clone(), i))
                    .collect();
                GroupTable::from_permutations(&elements, &index)
            }
            NamedGroup::Quaternion => {
                check_bound(8, max_order)?;
                // units 1, i, j, k as 0..4; unit products as (sign, unit)
                const UNIT: [[(bool, usize); 4]; 4] = [
                    [(false, 0), (false, 1), (false, 2), (false, 3)],
                    [(false, 1), (true, 0), (false, 3), (true, 2)],
                    [(false, 2), (true, 3), (true, 0), (false, 1)],
                    [(false, 3), (false, 2), (true, 1), (true, 0)],
                ];
                let mut mul = Vec::with_capacity(64);
                for a in 0..8 {
                    for b in 0..8 {
                        let (neg, u) = UNIT[a / 2][b / 2];
                        let sign = neg ^ (a % 2 == 1) ^ (b % 2 == 1);
                        mul.push((2 * u + sign as usize) as u32);
                    }
                }
                let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
                    .iter()
                    .map(|s| s.to_string())
                    .collect();
                GroupTable::from_flat(8, mul, Some(labels))
            }
            NamedGroup::Product(ref parts) => {
                let mut iter = parts.iter();
                let first = iter
                    .next()
                    .ok_or_else(|| Error::Malformed("empty product".into()))?;
                let mut acc = first.build(max_order)?;
                for p in iter {
                    let next = p.build(max_order)?;
                    check_bound(acc.order() * next.order(), max_order)?;
                    acc = GroupTable::direct_product(&acc, &next)?;
                }
                Ok(acc)
            }
        }
    }
}

fn check_bound(order: usize, bound: usize) -> Result<()> {
    if order > bound {
        Err(Error::OrderBoundExceeded { order, bound })
    } else {
        Ok(())
    }
}

impl FromStr for NamedGroup {
    type Err = Error;

    /// `cyclic:4`, `dihedral:6`, `symmetric:4`, `alternating:4`,
    /// `quaternion:8`, `trivial`, `product:<spec>,<spec>[,...]`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("product:") {
            let parts = rest
                .split(',')
                .map(str::parse)
                .collect::<Result<Vec<NamedGroup>>>()?;
            if parts.is_empty() {
                return Err(Error::Malformed("empty product".into()));
            }
            return Ok(NamedGroup::Product(parts));
        }
        if s == "trivial" {
            return Ok(NamedGroup::Cyclic(1));
        }
        let (family, param) = s
            .split_once(':')
            .ok_or_else(|| Error::Malformed(format!("group spec `{s}` needs family:parameter")))?;
        let n: usize = param
            .parse()
            .map_err(|_| Error::Malformed(format!("bad group parameter `{param}`")))?;
        match family {
            "cyclic" | "Z" => Ok(NamedGroup::Cyclic(n)),
            "dihedral" | "D" => Ok(NamedGroup::Dihedral(n)),
            "symmetric" | "S" => Ok(NamedGroup::Symmetric(n)),
            "alternating" | "A" => Ok(NamedGroup::Alternating(n)),
            "quaternion" | "Q" if n == 8 => Ok(NamedGroup::Quaternion),
            "quaternion" | "Q" => Err(Error::Malformed(
                "only the quaternion group of order 8 is supported".into(),
            )),
            _ => Err(Error::Malformed(format!("unknown group family `{family}`"))),
        }
    }
}

impl fmt::Display for NamedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGroup::Cyclic(n) => write!(f, "cyclic:{n}"),
            NamedGroup::Dihedral(n) => write!(f, "dihedral:{n}"),
            NamedGroup::Symmetric(n) => write!(f, "symmetric:{n}"),
            NamedGroup::Alternating(n) => write!(f, "alternating:{n}"),
            NamedGroup::Quaternion => write!(f, "quaternion:8"),
            NamedGroup::Product(parts) => {
                write!(f, "product:")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_classes(g: &GroupTable) -> Vec<Vec<usize>> {
        let n = g.order();
        let mut out: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            let mut orbit: Vec<usize> = (0..n)
                .map(|y| {
                    // y x y^-1 with the inverse found by search
                    let yi = (0..n).find(|&z| g.mul(y, z) == 0).unwrap();
                    g.mul(g.mul(y, x), yi)
                })
                .collect();
            orbit.sort_unstable();
            orbit.dedup();
            if !out.contains(&orbit) {
                out.push(orbit);
            }
        }
        out.sort_by_key(|c| c[0]);
        out
    }

    #[test]
    fn trivial_group() {
        let g = GroupTable::from_cayley_table(&[vec![0]], None).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.num_classes(), 1);
    }

    #[test]
    fn z2_from_table() {
        let g = GroupTable::from_cayley_table(&[vec![0, 1], vec![1, 0]], None).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.num_classes(), 2);
    }

    #[test]
    fn two_identities_rejected() {
        let err = GroupTable::from_cayley_table(&[vec![0, 1], vec![1, 1]], None).unwrap_err();
        assert!(matches!(err, Error::NotLatinSquare(_) | Error::NoInverse { .. }));
    }

    #[test]
    fn identity_is_moved_to_zero() {
        // Z3 with the identity stored at index 2
        let t = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        let labels = vec!["a".into(), "b".into(), "id".into()];
        let g = GroupTable::from_cayley_table(&t, Some(labels)).unwrap();
        assert_eq!(g.label(0), "id");
        for x in 0..3 {
            assert_eq!(g.mul(0, x), x);
            assert_eq!(g.mul(x, g.inv(x)), 0);
        }
    }

    #[test]
    fn rejects_missing_identity() {
        // x*y = -x-y mod 3 is a quasigroup without identity
        let t: Vec<Vec<usize>> = (0..3)
            .map(|a| (0..3).map(|b| (6 - a - b) % 3).collect())
            .collect();
        assert_eq!(GroupTable::from_cayley_table(&t, None).unwrap_err(), Error::NoIdentity);
    }

    #[test]
    fn rejects_nonassociative_loop() {
        // smallest non-associative loop (order 5, has identity and inverses)
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = GroupTable::from_cayley_table(&t, None).unwrap_err();
        assert!(matches!(err, Error::NotAssociative { .. }), "{err:?}");
    }

    #[test]
    fn rejects_out_of_range_and_ragged() {
        assert!(GroupTable::from_cayley_table(&[vec![0, 2], vec![1, 0]], None).is_err());
        assert!(GroupTable::from_cayley_table(&[vec![0, 1], vec![1]], None).is_err());
    }

    #[test]
    fn s3_from_generators() {
        let g = GroupTable::from_permutation_generators(3, &[vec![1, 2, 0], vec![1, 0, 2]]).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.num_classes(), 3);
        assert!(!g.is_abelian());
    }

    #[test]
    fn empty_generators_give_trivial_group() {
        let g = GroupTable::from_permutation_generators(4, &[]).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn four_cycle_generates_z4() {
        let g = GroupTable::from_permutation_generators(4, &[vec![1, 2, 3, 0]]).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.num_classes(), 4);
        assert_eq!(brute_force_classes(&g).len(), 4);
    }

    #[test]
    fn closure_respects_bound() {
        let err = GroupTable::from_permutation_generators_bounded(
            4,
            &[vec![1, 2, 3, 0], vec![1, 0, 2, 3]],
            10,
        )
        .unwrap_err();
        assert!(matches!(err, Error::OrderBoundExceeded { .. }));
    }

    #[test]
    fn non_permutation_generator_rejected() {
        assert!(GroupTable::from_permutation_generators(3, &[vec![0, 0, 1]]).is_err());
    }

    #[test]
    fn d6_layout_and_classes() {
        let g = GroupTable::named(NamedGroup::Dihedral(6)).unwrap();
        let labels: Vec<&str> = g.labels().iter().map(String::as_str).collect();
        assert_eq!(labels, ["e", "r", "r^2", "s", "rs", "r^2s"]);
        assert_eq!(g.conjugacy_classes(), &[vec![0], vec![1, 2], vec![3, 4, 5]]);
        assert_eq!(g.conjugacy_classes(), brute_force_classes(&g).as_slice());
        // s r s = r^-1
        assert_eq!(g.mul(g.mul(3, 1), 3), 2);
        assert_eq!(g.center(), vec![0]);
    }

    #[test]
    fn named_families() {
        let c5 = GroupTable::named(NamedGroup::Cyclic(5)).unwrap();
        assert!(c5.conjugacy_classes().iter().all(|c| c.len() == 1));
        let s4 = GroupTable::named(NamedGroup::Symmetric(4)).unwrap();
        assert_eq!((s4.order(), s4.num_classes()), (24, 5));
        assert_eq!(brute_force_classes(&s4).len(), 5);
        let a4 = GroupTable::named(NamedGroup::Alternating(4)).unwrap();
        assert_eq!((a4.order(), a4.num_classes()), (12, 4));
        let q8 = GroupTable::named(NamedGroup::Quaternion).unwrap();
        let mut sizes: Vec<usize> = q8.conjugacy_classes().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, [1, 1, 2, 2, 2]);
        assert_eq!(q8.center(), vec![0, 1]);
        assert_eq!(q8.conjugacy_classes(), brute_force_classes(&q8).as_slice());
    }

    #[test]
    fn symmetric_bound() {
        assert!(GroupTable::named(NamedGroup::Symmetric(8)).is_err());
    }

    #[test]
    fn products() {
        let d6 = GroupTable::named(NamedGroup::Dihedral(6)).unwrap();
        let p = GroupTable::direct_product(&d6, &d6).unwrap();
        assert_eq!((p.order(), p.num_classes()), (36, 9));
        assert_eq!(p.num_classes(), brute_force_classes(&p).len());
        let t = GroupTable::named(NamedGroup::Cyclic(1)).unwrap();
        let q = GroupTable::direct_product(&d6, &t).unwrap();
        assert_eq!(q.conjugacy_classes(), d6.conjugacy_classes());
        let z2 = GroupTable::named(NamedGroup::Cyclic(2)).unwrap();
        let v4 = GroupTable::direct_product(&z2, &z2).unwrap();
        assert_eq!(v4.num_classes(), 4);
    }

    #[test]
    fn spec_strings() {
        let p: NamedGroup = "product:dihedral:6,dihedral:6".parse().unwrap();
        assert_eq!(p.build(DEFAULT_MAX_ORDER).unwrap().order(), 36);
        assert_eq!(p.to_string(), "product:dihedral:6,dihedral:6");
        assert!("dihedral:5".parse::<NamedGroup>().unwrap().build(100).is_err());
        assert!("quaternion:16".parse::<NamedGroup>().is_err());
        assert!("foo:3".parse::<NamedGroup>().is_err());
        assert_eq!("cyclic:1".parse::<NamedGroup>().unwrap().build(10).unwrap().order(), 1);
    }

    #[test]
    fn file_round_trip() {
        let g = GroupTable::named(NamedGroup::Quaternion).unwrap();
        let json = serde_json::to_string(&g.to_file()).unwrap();
        let back = GroupTable::from_file(&serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(back, g);
    }
}
