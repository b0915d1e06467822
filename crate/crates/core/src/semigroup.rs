//! Numerical semigroups over exact integers.
//!
//! A [`NumericalSemigroup`] keeps its minimal generators together with a
//! membership table that covers `0..=frobenius + max(gens)`. Every query past
//! the Frobenius number answers `true` without touching the table.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// Strictly increasing, coprime, minimal list of positive generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct GeneratorSet(Vec<i64>);

impl GeneratorSet {
    /// Validates an already minimal generating set. The input may be in any
    /// order; it is stored sorted.
    pub fn new(gens: &[i64]) -> Result<Self> {
        let minimal = Self::minimalize(gens)?;
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if let Some(&value) = sorted.iter().find(|g| !minimal.0.contains(g)) {
            return Err(Error::NotMinimal { value });
        }
        if sorted.len() != gens.len() {
            let dup = duplicate_of(gens);
            return Err(Error::NotMinimal { value: dup });
        }
        Ok(minimal)
    }

    /// Returns the unique minimal generating set of the monoid spanned by `raw`.
    pub fn minimalize(raw: &[i64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(&bad) = raw.iter().find(|&&g| g <= 0) {
            return Err(Error::NonPositive(bad));
        }
        let gcd = raw.iter().fold(0i64, |acc, &g| acc.gcd(&g));
        if gcd != 1 {
            return Err(Error::NonCoprime { gcd });
        }
        let mut sorted = raw.to_vec();
        sorted.sort_unstable();
        sorted.dedup();

        let top = *sorted.last().expect("non-empty");
        let mut reach = vec![false; top as usize + 1];
        reach[0] = true;
        let mut kept: Vec<i64> = Vec::new();
        for &g in &sorted {
            if reach[g as usize] {
                continue;
            }
            kept.push(g);
            // unbounded knapsack update with the new generator
            for t in g as usize..=top as usize {
                if reach[t - g as usize] {
                    reach[t] = true;
                }
            }
        }
        Ok(GeneratorSet(kept))
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min(&self) -> i64 {
        self.0[0]
    }

    pub fn max(&self) -> i64 {
        *self.0.last().expect("non-empty")
    }
}

fn duplicate_of(gens: &[i64]) -> i64 {
    let mut seen = std::collections::BTreeSet::new();
    for &g in gens {
        if !seen.insert(g) {
            return g;
        }
    }
    gens[0]
}

/// Coefficient vector of one factorization, aligned with a generator list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Factorization(pub Vec<u32>);

impl Factorization {
    pub fn degree(&self, gens: &[i64]) -> i64 {
        self.0
            .iter()
            .zip(gens)
            .map(|(&c, &g)| i64::from(c) * g)
            .sum()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, _)| i)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AperySet {
    pub modulus: i64,
    /// Sorted ascending; exactly one element per residue class.
    pub elements: Vec<i64>,
}

impl AperySet {
    pub fn contains(&self, t: i64) -> bool {
        self.elements.binary_search(&t).is_ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PfSet {
    pub elements: Vec<i64>,
}

impl PfSet {
    pub fn semigroup_type(&self) -> usize {
        self.elements.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    gens: GeneratorSet,
    frobenius: i64,
    membership: Vec<bool>,
}

impl NumericalSemigroup {
    pub fn build(gens: GeneratorSet) -> Self {
        let m = gens.min() as usize;
        let g = gens.as_slice();
        let mut membership = vec![true];
        let mut run = 1usize;
        let mut t = 0usize;
        // m consecutive members mean everything after them is a member too
        while run < m {
            t += 1;
            let member = g
                .iter()
                .any(|&a| a as usize <= t && membership[t - a as usize]);
            membership.push(member);
            run = if member { run + 1 } else { 0 };
        }
        let frobenius = t as i64 - m as i64;
        let horizon = (frobenius + gens.max()).max(0) as usize;
        membership.resize(horizon + 1, true);
        NumericalSemigroup {
            gens,
            frobenius,
            membership,
        }
    }

    /// Minimalizes `raw` and builds the semigroup it generates.
    pub fn generated_by(raw: &[i64]) -> Result<Self> {
        Ok(Self::build(GeneratorSet::minimalize(raw)?))
    }

    pub fn generators(&self) -> &[i64] {
        self.gens.as_slice()
    }

    pub fn generator_set(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn multiplicity(&self) -> i64 {
        self.gens.min()
    }

    pub fn embedding_dimension(&self) -> usize {
        self.gens.len()
    }

    /// Membership test; negative integers are never members.
    pub fn contains(&self, t: i64) -> bool {
        if t < 0 {
            false
        } else if t > self.frobenius {
            true
        } else {
            self.membership[t as usize]
        }
    }

    pub fn try_contains(&self, t: i64) -> Result<bool> {
        if t < 0 {
            return Err(Error::NegativeInput(t));
        }
        Ok(self.contains(t))
    }

    pub fn gaps(&self) -> Vec<i64> {
        (0..=self.frobenius)
            .filter(|&t| !self.contains(t))
            .collect()
    }

    pub fn genus(&self) -> usize {
        self.gaps().len()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..=self.frobenius).all(|t| self.contains(t) != self.contains(self.frobenius - t))
    }

    pub fn apery(&self, m: i64) -> Result<AperySet> {
        if m <= 0 || !self.contains(m) {
            return Err(Error::ModulusNotInSemigroup(m));
        }
        let mut best = vec![None::<i64>; m as usize];
        let mut found = 0;
        let mut t = 0i64;
        while found < m {
            let r = (t % m) as usize;
            if best[r].is_none() && self.contains(t) {
                best[r] = Some(t);
                found += 1;
            }
            t += 1;
        }
        let mut elements: Vec<i64> = best.into_iter().map(|b| b.expect("filled")).collect();
        elements.sort_unstable();
        Ok(AperySet {
            modulus: m,
            elements,
        })
    }

    pub fn pseudo_frobenius(&self) -> PfSet {
        let elements = self
            .gaps()
            .into_iter()
            .filter(|&g| self.gens.as_slice().iter().all(|&a| self.contains(g + a)))
            .collect();
        PfSet { elements }
    }

    pub fn semigroup_type(&self) -> usize {
        self.pseudo_frobenius().semigroup_type()
    }

    /// All factorizations of `t` over the minimal generators, in
    /// lexicographically increasing coefficient order.
    pub fn factorizations(&self, t: i64) -> Vec<Factorization> {
        if t < 0 || !self.contains(t) {
            return Vec::new();
        }
        factorizations_over(self.generators(), t)
    }
}

/// Enumerates every non-negative solution of `sum c_i * gens[i] = t` by
/// bounded knapsack, lexicographically increasing in the coefficients.
/// `gens` need not generate a numerical semigroup.
pub fn factorizations_over(gens: &[i64], t: i64) -> Vec<Factorization> {
    let mut out = Vec::new();
    if t < 0 || gens.is_empty() {
        return out;
    }
    // suffix[i][r]: r is representable by gens[i..]
    let n = gens.len();
    let len = t as usize + 1;
    let mut suffix = vec![vec![false; len]; n + 1];
    suffix[n][0] = true;
    for i in (0..n).rev() {
        let g = gens[i] as usize;
        for r in 0..len {
            suffix[i][r] = suffix[i + 1][r] || (r >= g && suffix[i][r - g]);
        }
    }
    if !suffix[0][t as usize] {
        return out;
    }
    let mut current = vec![0u32; n];
    enumerate(gens, &suffix, 0, t, &mut current, &mut out);
    out
}

fn enumerate(
    gens: &[i64],
    suffix: &[Vec<bool>],
    i: usize,
    rem: i64,
    current: &mut Vec<u32>,
    out: &mut Vec<Factorization>,
) {
    if i == gens.len() {
        if rem == 0 {
            out.push(Factorization(current.clone()));
        }
        return;
    }
    let g = gens[i];
    let mut c = 0;
    while c * g <= rem {
        let left = rem - c * g;
        if suffix[i + 1][left as usize] {
            current[i] = c as u32;
            enumerate(gens, suffix, i + 1, left, current, out);
        }
        c += 1;
    }
    current[i] = 0;
}

/// Whether `t` is a non-negative integer combination of `gens`.
pub fn representable(gens: &[i64], t: i64) -> bool {
    if t < 0 {
        return false;
    }
    let mut reach = vec![false; t as usize + 1];
    reach[0] = true;
    for r in 1..=t as usize {
        reach[r] = gens
            .iter()
            .any(|&g| g as usize <= r && reach[r - g as usize]);
    }
    reach[t as usize]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(g: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::generated_by(g).unwrap()
    }

    #[test]
    fn minimalize_drops_redundant() {
        assert_eq!(
            GeneratorSet::minimalize(&[2, 3, 4]).unwrap().as_slice(),
            &[2, 3]
        );
        assert_eq!(
            GeneratorSet::minimalize(&[5, 7, 11, 13])
                .unwrap()
                .as_slice(),
            &[5, 7, 11, 13]
        );
    }

    #[test]
    fn minimalize_matches_bruteforce_oracle() {
        // element kept iff not representable by the other entries
        let raw = [15, 21, 17, 35, 52];
        let oracle: Vec<i64> = {
            let mut v: Vec<i64> = raw
                .iter()
                .copied()
                .filter(|&a| {
                    let others: Vec<i64> = raw.iter().copied().filter(|&b| b != a).collect();
                    !brute_representable(&others, a)
                })
                .collect();
            v.sort();
            v
        };
        assert_eq!(oracle, vec![15, 17, 21, 35]);
        assert_eq!(
            GeneratorSet::minimalize(&raw).unwrap().as_slice(),
            &oracle[..]
        );
    }

    fn brute_representable(gens: &[i64], t: i64) -> bool {
        fn go(gens: &[i64], t: i64) -> bool {
            if t == 0 {
                return true;
            }
            match gens.split_first() {
                None => false,
                Some((&g, rest)) => (0..=t / g).any(|c| go(rest, t - c * g)),
            }
        }
        go(gens, t)
    }

    #[test]
    fn minimalize_errors() {
        assert_eq!(GeneratorSet::minimalize(&[]), Err(Error::EmptyInput));
        assert_eq!(
            GeneratorSet::minimalize(&[4, 6]),
            Err(Error::NonCoprime { gcd: 2 })
        );
        assert_eq!(
            GeneratorSet::minimalize(&[0, 1]),
            Err(Error::NonPositive(0))
        );
        assert_eq!(
            GeneratorSet::new(&[2, 3, 4]),
            Err(Error::NotMinimal { value: 4 })
        );
    }

    #[test]
    fn frobenius_small_cases() {
        assert_eq!(sg(&[2, 3]).frobenius(), 1);
        assert_eq!(sg(&[2, 3]).gaps(), vec![1]);
        assert_eq!(sg(&[5, 7]).frobenius(), 23);
        assert_eq!(sg(&[15, 21, 17]).frobenius(), 103);
        assert_eq!(sg(&[1]).frobenius(), -1);
        assert!(sg(&[1]).gaps().is_empty());
    }

    #[test]
    fn two_generated_gap_count() {
        let h = sg(&[5, 7]);
        let gaps = h.gaps();
        assert_eq!(gaps.len(), 12);
        assert_eq!(*gaps.last().unwrap(), 23);
    }

    #[test]
    fn membership() {
        let h = sg(&[5, 7]);
        assert!(!h.contains(23));
        assert!(h.contains(24));
        assert!(h.contains(0));
        assert!(h.contains(1_000_000));
        assert_eq!(h.try_contains(-1), Err(Error::NegativeInput(-1)));
    }

    #[test]
    fn apery_sets() {
        assert_eq!(
            sg(&[5, 7]).apery(5).unwrap().elements,
            vec![0, 7, 14, 21, 28]
        );
        assert_eq!(sg(&[2, 3]).apery(2).unwrap().elements, vec![0, 3]);
        assert_eq!(sg(&[5, 7]).apery(6), Err(Error::ModulusNotInSemigroup(6)));
        assert!(sg(&[5, 7]).apery(0).is_err());
    }

    #[test]
    fn pseudo_frobenius_examples() {
        assert_eq!(sg(&[5, 7]).pseudo_frobenius().elements, vec![23]);
        assert_eq!(
            sg(&[36, 44, 29, 221]).pseudo_frobenius().elements,
            vec![271, 316, 331]
        );
        // F(S) = 295 for <27,33,29>; p1 = 295 - 4*27, p2 = 295 - 2*33
        let pf = sg(&[27, 33, 29, 152]).pseudo_frobenius().elements;
        assert_eq!(pf, vec![183, 295 - 108, 204, 295 - 66]);
    }

    #[test]
    fn factorization_lists() {
        let h = sg(&[5, 7]);
        let f = h.factorizations(35);
        assert_eq!(
            f,
            vec![Factorization(vec![0, 5]), Factorization(vec![7, 0])]
        );
        assert!(h.factorizations(1).is_empty());

        let h = sg(&[5, 7, 11, 13]);
        let f = h.factorizations(22);
        // exhaustive oracle over the bounded box
        let mut oracle = Vec::new();
        for a in 0..=4u32 {
            for b in 0..=3u32 {
                for c in 0..=2u32 {
                    for d in 0..=1u32 {
                        if 5 * a + 7 * b + 11 * c + 13 * d == 22 {
                            oracle.push(Factorization(vec![a, b, c, d]));
                        }
                    }
                }
            }
        }
        assert_eq!(f, oracle);
        assert!(f.contains(&Factorization(vec![3, 1, 0, 0])));
        assert!(f.contains(&Factorization(vec![0, 0, 2, 0])));
    }

    #[test]
    fn factorizations_over_non_numerical_monoid() {
        // <4, 6> is not numerical but still has factorizations
        assert_eq!(factorizations_over(&[4, 6], 12).len(), 2);
        assert!(factorizations_over(&[4, 6], 7).is_empty());
        assert!(representable(&[4, 6], 10));
        assert!(!representable(&[4, 6], 7));
    }

    #[test]
    fn symmetric_detection() {
        assert!(sg(&[5, 7]).is_symmetric());
        assert!(sg(&[15, 21, 17]).is_symmetric());
        assert!(!sg(&[5, 7, 11, 13]).is_symmetric());
    }
}
