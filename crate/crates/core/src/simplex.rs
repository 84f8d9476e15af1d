//! Ordinals `[n] = {0 < 1 < ... < n}` and the nondecreasing maps between them.
//!
//! A [`MonotoneMap`] is stored as its full value table. Sources are always
//! materialized (the table has `m + 1` entries) so they are plain `usize`;
//! targets are arbitrary-precision because pointwise products grow
//! multiplicatively.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The finite ordinal `[n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ordinal(BigUint);

impl Ordinal {
    pub fn new(n: impl Into<BigUint>) -> Self {
        Ordinal(n.into())
    }

    pub fn zero() -> Self {
        Ordinal(BigUint::zero())
    }

    /// The largest element `n` of `[n]`.
    pub fn top(&self) -> &BigUint {
        &self.0
    }

    /// `n` as a machine index, for ordinals small enough to enumerate.
    pub fn to_usize(&self) -> Result<usize> {
        self.0.to_usize().ok_or_else(|| Error::TooLarge(self.0.clone()))
    }

    /// `[p] , [q] -> [p*q]`.
    pub fn product(&self, other: &Ordinal) -> Ordinal {
        Ordinal(&self.0 * &other.0)
    }

    pub fn contains(&self, value: &BigUint) -> bool {
        value <= &self.0
    }
}

impl From<BigUint> for Ordinal {
    fn from(n: BigUint) -> Self {
        Ordinal(n)
    }
}

impl From<usize> for Ordinal {
    fn from(n: usize) -> Self {
        Ordinal(BigUint::from(n))
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        Ordinal(BigUint::from(n))
    }
}

impl From<u32> for Ordinal {
    fn from(n: u32) -> Self {
        Ordinal(BigUint::from(n))
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0)
    }
}

impl FromStr for Ordinal {
    type Err = Error;

    /// `"3"` or `"[3]"`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t.strip_prefix('[').and_then(|r| r.strip_suffix(']')).unwrap_or(t);
        BigUint::from_str(inner.trim())
            .map(Ordinal)
            .map_err(|_| Error::bad_literal(s, "expected a natural such as 3 or [3]"))
    }
}

/// A nondecreasing map `[m] -> [n]`.
///
/// The only way to obtain one is through a validating constructor, so every
/// value satisfies the length, range and monotonicity invariants.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonotoneMap {
    values: Vec<BigUint>,
    target: Ordinal,
}

impl MonotoneMap {
    /// Source ordinal `m` of `[m] -> [n]`.
    pub fn source(&self) -> usize {
        self.values.len() - 1
    }

    pub fn target(&self) -> &Ordinal {
        &self.target
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    pub fn value(&self, i: usize) -> &BigUint {
        &self.values[i]
    }

    /// The value at `i` as an index into the target. Only valid when the
    /// target is small enough to be a source of some other map.
    pub(crate) fn index(&self, i: usize) -> usize {
        self.values[i]
            .to_usize()
            .expect("value of a map into a materialized ordinal")
    }

    pub fn is_identity(&self) -> bool {
        self.target.0 == BigUint::from(self.source())
            && self
                .values
                .iter()
                .enumerate()
                .all(|(i, v)| *v == BigUint::from(i))
    }

    /// Constructs from trusted values. Used internally where the invariants
    /// hold by construction; checked in debug builds.
    pub(crate) fn from_parts_unchecked(target: Ordinal, values: Vec<BigUint>) -> Self {
        debug_assert!(!values.is_empty());
        debug_assert!(values.windows(2).all(|w| w[0] <= w[1]));
        debug_assert!(values.iter().all(|v| target.contains(v)));
        MonotoneMap { values, target }
    }

    /// Parses the value-table literal `"0,1,1,3"`. The source is deduced
    /// from the length; the target defaults to the largest value.
    pub fn parse(literal: &str, target: Option<Ordinal>) -> Result<Self> {
        let values = parse_values(literal)?;
        let target = match target {
            Some(t) => t,
            None => Ordinal(values.iter().max().cloned().unwrap_or_default()),
        };
        make_map(values.len() - 1, target, values)
    }

    /// `"0,2:[1]->[2]"`, used in counterexample records.
    pub fn signature(&self) -> String {
        format!("{}:[{}]->{}", self, self.source(), self.target)
    }
}

impl fmt::Display for MonotoneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for MonotoneMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MonotoneMap::parse(s, None)
    }
}

fn parse_values(literal: &str) -> Result<Vec<BigUint>> {
    let trimmed = literal.trim();
    if trimmed.is_empty() {
        return Err(Error::bad_literal(literal, "empty map literal"));
    }
    trimmed
        .split(',')
        .map(|tok| {
            BigUint::from_str(tok.trim())
                .map_err(|_| Error::bad_literal(literal, format!("{:?} is not a natural", tok.trim())))
        })
        .collect()
}

/// Validating constructor for `[m] -> [n]`.
pub fn make_map(m: usize, n: impl Into<Ordinal>, values: Vec<BigUint>) -> Result<MonotoneMap> {
    let target = n.into();
    if values.len() != m + 1 {
        return Err(Error::LengthMismatch {
            expected: m + 1,
            found: values.len(),
        });
    }
    for (index, value) in values.iter().enumerate() {
        if !target.contains(value) {
            return Err(Error::OutOfRange {
                index,
                value: value.clone(),
                target: target.0.clone(),
            });
        }
        if index > 0 && values[index - 1] > *value {
            return Err(Error::NotMonotone { index });
        }
    }
    Ok(MonotoneMap { values, target })
}

/// Convenience wrapper over [`make_map`] for small literal tables.
pub fn map_from(m: usize, n: usize, values: &[usize]) -> Result<MonotoneMap> {
    make_map(m, n, values.iter().map(|&v| BigUint::from(v)).collect())
}

pub fn identity(n: usize) -> MonotoneMap {
    MonotoneMap::from_parts_unchecked(n.into(), (0..=n).map(BigUint::from).collect())
}

/// `g ∘ f`, defined when `f`'s target is `g`'s source.
pub fn compose(g: &MonotoneMap, f: &MonotoneMap) -> Result<MonotoneMap> {
    if f.target.0 != BigUint::from(g.source()) {
        return Err(Error::SourceTargetMismatch {
            context: format!(
                "inner map lands in {} but outer map starts at [{}]",
                f.target,
                g.source()
            ),
        });
    }
    let values = (0..=f.source()).map(|i| g.values[f.index(i)].clone()).collect();
    Ok(MonotoneMap::from_parts_unchecked(g.target.clone(), values))
}

/// All maps `[m] -> [n]` in lexicographic order of their value tables.
pub fn enumerate_maps(m: usize, n: usize) -> Vec<MonotoneMap> {
    enumerate_tables(m, n)
        .into_iter()
        .map(|t| {
            MonotoneMap::from_parts_unchecked(n.into(), t.into_iter().map(BigUint::from).collect())
        })
        .collect()
}

/// Nondecreasing tables of length `m + 1` over `0..=n`, lexicographically.
pub(crate) fn enumerate_tables(m: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = vec![0usize; m + 1];
    loop {
        out.push(current.clone());
        // Advance the rightmost position that can still grow, then flatten
        // everything after it to the same value.
        let Some(pos) = (0..=m).rev().find(|&i| current[i] < n) else {
            return out;
        };
        let v = current[pos] + 1;
        for slot in &mut current[pos..] {
            *slot = v;
        }
    }
}

/// `|Δ([m],[n])| = C(m+n+1, m+1)`.
pub fn count_maps(m: usize, n: usize) -> BigUint {
    num_integer::binomial(BigUint::from(m + n + 1), BigUint::from(m + 1))
}

pub fn constant_map(m: usize, n: impl Into<Ordinal>, c: impl Into<BigUint>) -> Result<MonotoneMap> {
    let target = n.into();
    let c = c.into();
    if !target.contains(&c) {
        return Err(Error::OutOfRange {
            index: 0,
            value: c,
            target: target.0,
        });
    }
    Ok(MonotoneMap::from_parts_unchecked(target, vec![c; m + 1]))
}

/// The unique map `[m] -> [0]`.
pub fn terminal_map(m: usize) -> MonotoneMap {
    MonotoneMap::from_parts_unchecked(Ordinal::zero(), vec![BigUint::zero(); m + 1])
}

/// `[0] -> [1]` picking the vertex `epsilon`.
pub fn vertex_map(epsilon: bool) -> MonotoneMap {
    MonotoneMap::from_parts_unchecked(1usize.into(), vec![BigUint::from(epsilon as u8)])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(m: usize, n: usize, v: &[usize]) -> MonotoneMap {
        map_from(m, n, v).unwrap()
    }

    #[test]
    fn make_map_examples() {
        assert_eq!(m(1, 1, &[0, 1]), identity(1));
        assert_eq!(map_from(1, 2, &[2, 0]), Err(Error::NotMonotone { index: 1 }));
        assert_eq!(m(2, 1, &[0, 0, 1]).values().len(), 3);
    }

    #[test]
    fn make_map_errors_name_the_index() {
        assert_eq!(
            map_from(2, 1, &[0, 1]),
            Err(Error::LengthMismatch {
                expected: 3,
                found: 2
            })
        );
        assert_eq!(
            map_from(1, 1, &[0, 2]),
            Err(Error::OutOfRange {
                index: 1,
                value: 2u32.into(),
                target: 1u32.into()
            })
        );
    }

    #[test]
    fn identity_examples() {
        assert_eq!(identity(0).to_string(), "0");
        assert_eq!(identity(2).to_string(), "0,1,2");
        assert!(identity(3).is_identity());
    }

    #[test]
    fn compose_examples() {
        let g = m(2, 1, &[0, 0, 1]);
        let f = m(1, 2, &[0, 2]);
        assert_eq!(compose(&g, &f).unwrap(), m(1, 1, &[0, 1]));

        let g = m(1, 1, &[0, 1]);
        let f = m(1, 1, &[1, 1]);
        assert_eq!(compose(&g, &f).unwrap(), m(1, 1, &[1, 1]));
    }

    #[test]
    fn compose_rejects_mismatched_shapes() {
        let g = m(2, 1, &[0, 0, 1]);
        let f = m(1, 1, &[0, 1]);
        assert!(matches!(
            compose(&g, &f),
            Err(Error::SourceTargetMismatch { .. })
        ));
    }

    #[test]
    fn enumerate_examples() {
        let tables: Vec<String> = enumerate_maps(1, 1).iter().map(|f| f.to_string()).collect();
        assert_eq!(tables, ["0,0", "0,1", "1,1"]);
        let tables: Vec<String> = enumerate_maps(0, 2).iter().map(|f| f.to_string()).collect();
        assert_eq!(tables, ["0", "1", "2"]);
        assert_eq!(enumerate_maps(2, 2).len(), 10);
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_maps(1, 1), 3u32.into());
        assert_eq!(count_maps(0, 7), 8u32.into());
        assert_eq!(count_maps(2, 2), 10u32.into());
    }

    #[test]
    fn constants_terminal_and_vertices() {
        assert_eq!(constant_map(2, 1usize, 0u32).unwrap().to_string(), "0,0,0");
        assert_eq!(constant_map(2, 1usize, 1u32).unwrap().to_string(), "1,1,1");
        assert_eq!(constant_map(0, 3usize, 2u32).unwrap().to_string(), "2");
        assert!(matches!(
            constant_map(1, 1usize, 2u32),
            Err(Error::OutOfRange { .. })
        ));
        assert_eq!(terminal_map(3).to_string(), "0,0,0,0");
        assert_eq!(terminal_map(0), identity(0));
        assert_eq!(vertex_map(false).to_string(), "0");
        assert_eq!(vertex_map(true).to_string(), "1");
        for mm in 0..4 {
            for eps in [false, true] {
                assert_eq!(
                    compose(&vertex_map(eps), &terminal_map(mm)).unwrap(),
                    constant_map(mm, 1usize, eps as u32).unwrap()
                );
            }
        }
    }

    #[test]
    fn terminality() {
        for mm in 0..=3 {
            for n in 0..=3 {
                for f in enumerate_maps(mm, n) {
                    assert_eq!(compose(&terminal_map(n), &f).unwrap(), terminal_map(mm));
                }
            }
        }
    }

    #[test]
    fn literal_parsing() {
        let f: MonotoneMap = "0,1,1,3".parse().unwrap();
        assert_eq!(f.source(), 3);
        assert_eq!(f.target(), &Ordinal::from(3usize));
        let g = MonotoneMap::parse("0, 2", Some(4usize.into())).unwrap();
        assert_eq!(g.signature(), "0,2:[1]->[4]");
        assert!(matches!(MonotoneMap::parse("", None), Err(Error::BadLiteral { .. })));
        assert!(matches!(MonotoneMap::parse("0,x", None), Err(Error::BadLiteral { .. })));
        assert!(matches!(MonotoneMap::parse("2,1", None), Err(Error::NotMonotone { index: 1 })));
    }

    #[test]
    fn large_targets_are_exact() {
        let big = BigUint::from(u64::MAX) * BigUint::from(u64::MAX);
        let f = make_map(1, Ordinal::new(big.clone()), vec![BigUint::zero(), big.clone()]).unwrap();
        assert_eq!(f.value(1), &big);
        assert!(Ordinal::new(big).to_usize().is_err());
    }
}
