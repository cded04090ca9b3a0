//! Signatures, Weyl dimensions, and the index sets of the graded
//! decompositions of jet-differential bundles.
//!
//! Enumeration order is fixed: increasing `gamma`, then lexicographically
//! decreasing signature. The `visit_*` functions walk the same index sets in
//! the same order without allocating and are what the Euler sums use.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Weakly decreasing tuple of non-negative integers of length 2 or 3.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Signature {
    parts: Vec<i64>,
}

impl Signature {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.len() != 2 && parts.len() != 3 {
            return Err(Error::usage(format!(
                "signature must have 2 or 3 parts, got {}",
                parts.len()
            )));
        }
        if parts.iter().any(|&p| p < 0) {
            return Err(Error::usage(format!("negative part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::usage(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Signature { parts })
    }

    pub fn triple(l1: i64, l2: i64, l3: i64) -> Result<Self> {
        Self::new(vec![l1, l2, l3])
    }

    pub fn pair(l1: i64, l2: i64) -> Result<Self> {
        Self::new(vec![l1, l2])
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `λ + (l, ..., l)`; fails if a part would become negative.
    pub fn shifted(&self, l: i64) -> Result<Self> {
        Self::new(self.parts.iter().map(|p| p + l).collect())
    }

    /// Parts padded with zeros to length 3.
    pub fn as_triple(&self) -> [i64; 3] {
        let mut t = [0; 3];
        t[..self.parts.len()].copy_from_slice(&self.parts);
        t
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Dimension of the irreducible GL₂ or GL₃ representation with this highest
/// weight.
pub fn weyl_dim(sig: &Signature) -> u64 {
    weyl_dim_unchecked(sig.parts())
}

/// Weyl dimension for raw parts; rejects tuples that are not signatures.
pub fn weyl_dim_parts(parts: &[i64]) -> Result<u64> {
    Signature::new(parts.to_vec()).map(|s| weyl_dim(&s))
}

fn weyl_dim_unchecked(p: &[i64]) -> u64 {
    match p.len() {
        2 => (p[0] - p[1] + 1) as u64,
        3 => {
            let a = (p[0] - p[1] + 1) as u64;
            let b = (p[1] - p[2] + 1) as u64;
            let c = (p[0] - p[2] + 2) as u64;
            a * b * c / 2
        }
        _ => unreachable!("signature length is validated"),
    }
}

/// One irreducible constituent `Γ^λ` of a graded piece, tagged with the
/// auxiliary index `gamma` it belongs to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionTerm {
    pub gamma: u64,
    pub signature: Signature,
    pub schur_dim: u64,
}

impl DecompositionTerm {
    fn from_parts(gamma: u64, parts: &[i64]) -> Self {
        let signature = Signature {
            parts: parts.to_vec(),
        };
        let schur_dim = weyl_dim(&signature);
        DecompositionTerm {
            gamma,
            signature,
            schur_dim,
        }
    }
}

/// Green–Griffiths graded piece `S^{l₁} ⊗ ... ⊗ S^{l_k}` of a rank-3 bundle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GGTerm {
    pub degrees: Vec<u64>,
}

impl GGTerm {
    /// `Π C(l_i + 2, 2)`.
    pub fn dim(&self) -> u64 {
        self.degrees
            .iter()
            .map(|&l| (l + 1) * (l + 2) / 2)
            .product()
    }

    /// `Σ i·l_i`.
    pub fn weight(&self) -> u64 {
        self.degrees
            .iter()
            .enumerate()
            .map(|(i, &l)| (i as u64 + 1) * l)
            .sum()
    }
}

/// Anything that has a dimension and can be summed into a total.
pub trait Dimensioned {
    fn dimension(&self) -> u64;
}

impl Dimensioned for DecompositionTerm {
    fn dimension(&self) -> u64 {
        self.schur_dim
    }
}

impl Dimensioned for GGTerm {
    fn dimension(&self) -> u64 {
        self.dim()
    }
}

pub fn total_dimension<T: Dimensioned>(terms: &[T]) -> u64 {
    terms.iter().map(Dimensioned::dimension).sum()
}

/// Visits `(λ₁, λ₂, 0)` with `λ₁ + 2λ₂ = m`, `λ₁ ≥ λ₂`.
pub fn visit_ds2(m: u64, mut f: impl FnMut([i64; 3])) {
    let m = m as i64;
    for l2 in 0..=m / 2 {
        let l1 = m - 2 * l2;
        if l1 >= l2 {
            f([l1, l2, 0]);
        }
    }
}

/// Visits `(γ, (λ₁, λ₂))` with `λ₁ + 2λ₂ = m − γ`, `λ₁ − λ₂ ≥ γ`, `λ₂ ≥ γ`,
/// `5γ ≤ m`.
pub fn visit_ds3_dim2(m: u64, mut f: impl FnMut(u64, [i64; 2])) {
    let mut gamma = 0u64;
    while 5 * gamma <= m {
        let n = (m - gamma) as i64;
        let g = gamma as i64;
        for l2 in g..=n / 2 {
            let l1 = n - 2 * l2;
            if l1 - l2 >= g {
                f(gamma, [l1, l2]);
            }
        }
        gamma += 1;
    }
}

/// Visits `(γ, (λ₁, λ₂, λ₃))` with `λ₁ + 2λ₂ + 3λ₃ = m − γ`,
/// `λᵢ − λⱼ ≥ γ` for `i < j`, `λ₃ ≥ 0`, `5γ ≤ m`.
pub fn visit_ds3_dim3(m: u64, mut f: impl FnMut(u64, [i64; 3])) {
    let mut gamma = 0u64;
    while 5 * gamma <= m {
        let n = (m - gamma) as i64;
        let g = gamma as i64;
        for l1 in (0..=n).rev() {
            let rest = n - l1;
            let top = (rest / 2).min(l1 - g);
            let mut l2 = top;
            while l2 >= 0 {
                let r3 = rest - 2 * l2;
                if r3 % 3 == 0 {
                    let l3 = r3 / 3;
                    if l2 - l3 >= g {
                        f(gamma, [l1, l2, l3]);
                    } else {
                        // l2 - l3 only shrinks as l2 decreases
                        break;
                    }
                }
                l2 -= 1;
            }
        }
        gamma += 1;
    }
}

/// Visits `(l₁, ..., l_k)` with `l₁ + 2l₂ + ... + k·l_k = m`, lexicographically
/// decreasing.
pub fn visit_gg(k: usize, m: u64, mut f: impl FnMut(&[u64])) -> Result<()> {
    if !(1..=3).contains(&k) {
        return Err(Error::usage(format!("jet order {k} not in 1..=3")));
    }
    let mut buf = vec![0u64; k];
    fn rec(k: usize, pos: usize, rem: u64, buf: &mut Vec<u64>, f: &mut dyn FnMut(&[u64])) {
        let w = pos as u64 + 1;
        if pos + 1 == k {
            if rem.is_multiple_of(w) {
                buf[pos] = rem / w;
                f(buf);
            }
            return;
        }
        for l in (0..=rem / w).rev() {
            buf[pos] = l;
            rec(k, pos + 1, rem - l * w, buf, f);
        }
    }
    rec(k, 0, m, &mut buf, &mut f);
    Ok(())
}

/// `Gr E_{2,m} = ⊕_{λ₁+2λ₂=m} Γ^{(λ₁,λ₂,0)}`; non-decreasing tuples are
/// dropped since their Schur functor vanishes.
pub fn enumerate_ds2(m: u64) -> Vec<DecompositionTerm> {
    let mut out = Vec::new();
    visit_ds2(m, |l| out.push(DecompositionTerm::from_parts(0, &l)));
    out
}

/// Order-3 invariant jet differentials on a surface.
pub fn enumerate_ds3_dim2(m: u64) -> Vec<DecompositionTerm> {
    let mut out = Vec::new();
    visit_ds3_dim2(m, |g, l| out.push(DecompositionTerm::from_parts(g, &l)));
    out
}

/// Order-3 invariant jet differentials on a threefold.
pub fn enumerate_ds3_dim3(m: u64) -> Vec<DecompositionTerm> {
    let mut out = Vec::new();
    visit_ds3_dim3(m, |g, l| out.push(DecompositionTerm::from_parts(g, &l)));
    out
}

/// Green–Griffiths graded pieces for jets of order `k ∈ {2, 3}`.
pub fn enumerate_gg(k: usize, m: u64) -> Result<Vec<GGTerm>> {
    if k != 2 && k != 3 {
        return Err(Error::usage(format!(
            "Green-Griffiths order must be 2 or 3, got {k}"
        )));
    }
    let mut out = Vec::new();
    visit_gg(k, m, |l| {
        out.push(GGTerm {
            degrees: l.to_vec(),
        })
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sigs(terms: &[DecompositionTerm]) -> Vec<(u64, Vec<i64>)> {
        terms
            .iter()
            .map(|t| (t.gamma, t.signature.parts().to_vec()))
            .collect()
    }

    #[test]
    fn weyl_dimensions() {
        assert_eq!(weyl_dim_parts(&[1, 0, 0]).unwrap(), 3);
        assert_eq!(weyl_dim_parts(&[1, 1, 1]).unwrap(), 1);
        assert_eq!(weyl_dim_parts(&[5, 0, 0]).unwrap(), 21);
        assert_eq!(weyl_dim_parts(&[2, 1, 0]).unwrap(), 8);
        assert_eq!(weyl_dim_parts(&[4, 1]).unwrap(), 4);
        assert!(weyl_dim_parts(&[0, 1, 0]).unwrap_err().is_usage());
        assert!(weyl_dim_parts(&[1]).is_err());
        assert!(weyl_dim_parts(&[1, -1]).is_err());
    }

    #[test]
    fn ds2_examples() {
        let t = enumerate_ds2(2);
        assert_eq!(sigs(&t), vec![(0, vec![2, 0, 0])]);
        assert_eq!(total_dimension(&t), 6);
        let t = enumerate_ds2(3);
        assert_eq!(sigs(&t), vec![(0, vec![3, 0, 0]), (0, vec![1, 1, 0])]);
        assert_eq!(total_dimension(&t), 13);
        let t = enumerate_ds2(4);
        assert_eq!(sigs(&t), vec![(0, vec![4, 0, 0]), (0, vec![2, 1, 0])]);
        assert_eq!(total_dimension(&t), 23);
    }

    #[test]
    fn ds3_dim2_examples() {
        let t = enumerate_ds3_dim2(1);
        assert_eq!(sigs(&t), vec![(0, vec![1, 0])]);
        assert_eq!(total_dimension(&t), 2);
        let t = enumerate_ds3_dim2(3);
        assert_eq!(sigs(&t), vec![(0, vec![3, 0]), (0, vec![1, 1])]);
        assert_eq!(total_dimension(&t), 5);
        let t = enumerate_ds3_dim2(5);
        assert_eq!(
            sigs(&t),
            vec![(0, vec![5, 0]), (0, vec![3, 1]), (1, vec![2, 1])]
        );
        assert_eq!(total_dimension(&t), 11);
    }

    #[test]
    fn ds3_dim3_examples() {
        let t = enumerate_ds3_dim3(1);
        assert_eq!(sigs(&t), vec![(0, vec![1, 0, 0])]);
        assert_eq!(total_dimension(&t), 3);
        let t = enumerate_ds3_dim3(3);
        assert_eq!(sigs(&t), vec![(0, vec![3, 0, 0]), (0, vec![1, 1, 0])]);
        assert_eq!(total_dimension(&t), 13);
        let t = enumerate_ds3_dim3(5);
        assert_eq!(
            sigs(&t),
            vec![(0, vec![5, 0, 0]), (0, vec![3, 1, 0]), (1, vec![2, 1, 0])]
        );
        assert_eq!(total_dimension(&t), 44);
        assert!(sigs(&enumerate_ds3_dim3(6)).contains(&(0, vec![1, 1, 1])));
    }

    #[test]
    fn gg_examples() {
        let t = enumerate_gg(3, 3).unwrap();
        let d: Vec<Vec<u64>> = t.iter().map(|t| t.degrees.clone()).collect();
        assert_eq!(d, vec![vec![3, 0, 0], vec![1, 1, 0], vec![0, 0, 1]]);
        assert_eq!(total_dimension(&t), 22);
        let t = enumerate_gg(2, 2).unwrap();
        let d: Vec<Vec<u64>> = t.iter().map(|t| t.degrees.clone()).collect();
        assert_eq!(d, vec![vec![2, 0], vec![0, 1]]);
        assert_eq!(total_dimension(&t), 9);
        assert_eq!(total_dimension(&enumerate_gg(3, 1).unwrap()), 3);
        assert!(enumerate_gg(4, 3).is_err());
    }

    /// Brute-force index set: every triple in a box, filtered by the defining
    /// constraints. Independent of the nested-loop walk above.
    fn brute_ds3_dim3(m: u64) -> Vec<(u64, Vec<i64>)> {
        let mut out = Vec::new();
        let mi = m as i64;
        for g in 0..=mi {
            if 5 * g > mi {
                break;
            }
            let mut block = Vec::new();
            for l1 in 0..=mi {
                for l2 in 0..=mi {
                    for l3 in 0..=mi {
                        if l1 + 2 * l2 + 3 * l3 == mi - g
                            && l1 - l2 >= g
                            && l2 - l3 >= g
                            && l1 - l3 >= g
                        {
                            block.push(vec![l1, l2, l3]);
                        }
                    }
                }
            }
            block.sort_by(|a, b| b.cmp(a));
            out.extend(block.into_iter().map(|l| (g as u64, l)));
        }
        out
    }

    #[test]
    fn ds3_walk_matches_brute_force() {
        for m in 0..=24 {
            assert_eq!(sigs(&enumerate_ds3_dim3(m)), brute_ds3_dim3(m), "m = {m}");
        }
    }

    #[test]
    fn gg_total_counts_weighted_monomials() {
        // coefficient of t^m in 1/((1-t)^3 (1-t^2)^3 (1-t^3)^3)
        let mut series = [0u64; 21];
        series[0] = 1;
        for w in [1usize, 2, 3] {
            for _ in 0..3 {
                for i in w..series.len() {
                    series[i] += series[i - w];
                }
            }
        }
        for m in 0..=20u64 {
            let t = enumerate_gg(3, m).unwrap();
            assert_eq!(total_dimension(&t), series[m as usize], "m = {m}");
            assert!(t.iter().all(|t| t.weight() == m));
        }
    }

    proptest::proptest! {
        #[test]
        fn enumerations_are_signatures_without_duplicates(m in 0u64..60) {
            for terms in [enumerate_ds2(m), enumerate_ds3_dim2(m), enumerate_ds3_dim3(m)] {
                let mut seen = std::collections::HashSet::new();
                for t in &terms {
                    proptest::prop_assert!(Signature::new(t.signature.parts().to_vec()).is_ok());
                    proptest::prop_assert!(seen.insert((t.gamma, t.signature.clone())));
                    proptest::prop_assert_eq!(t.schur_dim, weyl_dim(&t.signature));
                }
            }
        }
    }
}
