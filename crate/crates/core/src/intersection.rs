//! Truncated intersection theory on threefolds.
//!
//! Classes live in `Q[c₁,c₂,c₃]` truncated above degree 3, on the basis
//! `{1; c₁; c₁², c₂; c₁³, c₁c₂, c₃}`, where `cᵢ` are the Chern classes of the
//! tangent bundle (for the logarithmic geometry: of the logarithmic tangent
//! bundle). The cotangent bundle has Chern roots `y₁, y₂, y₃` with
//! `e₁(y) = −c₁`, `e₂(y) = c₂`, `e₃(y) = −c₃`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::interp::UniPoly;
use crate::poly::{fmt_rational, int, rat, Monomial, Polynomial, Rational, VariableTable};
use crate::rep::Signature;

/// Basis labels, in storage order.
pub const BASIS: [&str; 7] = ["1", "c1", "c1^2", "c2", "c1^3", "c1c2", "c3"];

/// Graded degree of each basis slot.
pub const BASIS_DEGREE: [usize; 7] = [0, 1, 2, 2, 3, 3, 3];

/// Element of the truncated Chow ring, exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChowElement {
    c: [Rational; 7],
}

impl ChowElement {
    pub fn new(c: [Rational; 7]) -> Self {
        ChowElement { c }
    }

    pub fn zero() -> Self {
        ChowElement {
            c: std::array::from_fn(|_| Rational::zero()),
        }
    }

    pub fn scalar(x: Rational) -> Self {
        let mut e = Self::zero();
        e.c[0] = x;
        e
    }

    pub fn one() -> Self {
        Self::scalar(Rational::one())
    }

    /// `Σ coefficients[i] · BASIS[i]` from small integer numerators/denominators.
    pub fn from_ratios(r: [(i64, i64); 7]) -> Self {
        ChowElement {
            c: r.map(|(n, d)| rat(n, d)),
        }
    }

    pub fn coeffs(&self) -> &[Rational; 7] {
        &self.c
    }

    pub fn coeff(&self, slot: usize) -> &Rational {
        &self.c[slot]
    }

    pub fn rank(&self) -> &Rational {
        &self.c[0]
    }

    /// Homogeneous part of the given degree.
    pub fn part(&self, degree: usize) -> ChowElement {
        let mut out = Self::zero();
        for (i, d) in BASIS_DEGREE.iter().enumerate() {
            if *d == degree {
                out.c[i] = self.c[i].clone();
            }
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> ChowElement {
        ChowElement {
            c: std::array::from_fn(|i| &self.c[i] * s),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// `exp(x·c₁)` truncated: the Chern character of a line bundle whose first
    /// Chern class is `x·c₁`.
    pub fn exp_c1(x: &Rational) -> ChowElement {
        let x2 = x * x;
        let x3 = &x2 * x;
        let mut e = Self::one();
        e.c[1] = x.clone();
        e.c[2] = x2 / int(2);
        e.c[4] = x3 / int(6);
        e
    }

    /// Degree-3 part paired with the Chern numbers `(c₁³, c₁c₂, c₃)`.
    pub fn degree(&self, cn: &ChernNumbers) -> Rational {
        &self.c[4] * &cn.c1_cubed + &self.c[5] * &cn.c1c2 + &self.c[6] * &cn.c3
    }
}

impl Add for &ChowElement {
    type Output = ChowElement;
    fn add(self, rhs: &ChowElement) -> ChowElement {
        ChowElement {
            c: std::array::from_fn(|i| &self.c[i] + &rhs.c[i]),
        }
    }
}

impl Sub for ChowElement {
    type Output = ChowElement;
    fn sub(self, rhs: ChowElement) -> ChowElement {
        &self - &rhs
    }
}

impl Sub for &ChowElement {
    type Output = ChowElement;
    fn sub(self, rhs: &ChowElement) -> ChowElement {
        ChowElement {
            c: std::array::from_fn(|i| &self.c[i] - &rhs.c[i]),
        }
    }
}

impl Neg for &ChowElement {
    type Output = ChowElement;
    fn neg(self) -> ChowElement {
        ChowElement {
            c: std::array::from_fn(|i| -&self.c[i]),
        }
    }
}

impl Mul for &ChowElement {
    type Output = ChowElement;
    /// Product with everything above degree 3 dropped.
    fn mul(self, y: &ChowElement) -> ChowElement {
        let x = &self.c;
        let y = &y.c;
        ChowElement {
            c: [
                &x[0] * &y[0],
                &x[0] * &y[1] + &x[1] * &y[0],
                &x[0] * &y[2] + &x[2] * &y[0] + &x[1] * &y[1],
                &x[0] * &y[3] + &x[3] * &y[0],
                &x[0] * &y[4] + &x[4] * &y[0] + &x[1] * &y[2] + &x[2] * &y[1],
                &x[0] * &y[5] + &x[5] * &y[0] + &x[1] * &y[3] + &x[3] * &y[1],
                &x[0] * &y[6] + &x[6] * &y[0],
            ],
        }
    }
}

impl fmt::Display for ChowElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (q, b) in self.c.iter().zip(BASIS) {
            if q.is_zero() {
                continue;
            }
            let sep = match (first, q.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            first = false;
            let mag = fmt_rational(&q.abs());
            if b == "1" {
                write!(f, "{sep}{mag}")?;
            } else {
                write!(f, "{sep}{mag}*{b}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Serialize for ChowElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Chern character truncated at degree 3; the degree-0 part is the rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedCh(pub ChowElement);

impl TruncatedCh {
    pub fn rank(&self) -> Rational {
        self.0.rank().clone()
    }

    pub fn element(&self) -> &ChowElement {
        &self.0
    }
}

/// The Todd class `1 + c₁/2 + (c₁² + c₂)/12 + c₁c₂/24`.
pub fn todd() -> ChowElement {
    ChowElement::from_ratios([(1, 1), (1, 2), (1, 12), (1, 12), (0, 1), (1, 24), (0, 1)])
}

/// Which threefold the Chern numbers describe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "degree", rename_all = "kebab-case")]
pub enum Geometry {
    /// Smooth hypersurface of degree `d` in `P⁴`, with its tangent bundle.
    HypersurfaceP4(u64),
    /// `P³` with the logarithmic tangent bundle along a smooth surface of
    /// degree `d`.
    LogP3(u64),
    /// A compact threefold given only by its Chern numbers.
    Explicit,
}

impl fmt::Display for Geometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Geometry::HypersurfaceP4(d) => write!(f, "hypersurface-p4(d={d})"),
            Geometry::LogP3(d) => write!(f, "log-p3(d={d})"),
            Geometry::Explicit => write!(f, "explicit"),
        }
    }
}

/// The top intersection numbers `c₁³, c₁c₂, c₃` of a rank-3 bundle on a
/// threefold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChernNumbers {
    #[serde(serialize_with = "ser_rational")]
    pub c1_cubed: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub c1c2: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub c3: Rational,
    pub geometry: Geometry,
}

fn ser_rational<S: serde::Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_rational(q))
}

impl ChernNumbers {
    pub fn explicit(c1_cubed: Rational, c1c2: Rational, c3: Rational) -> Self {
        ChernNumbers {
            c1_cubed,
            c1c2,
            c3,
            geometry: Geometry::Explicit,
        }
    }

    pub fn as_triple(&self) -> (Rational, Rational, Rational) {
        (self.c1_cubed.clone(), self.c1c2.clone(), self.c3.clone())
    }

    /// Weights `w` with `χ(E) = Σ wᵢ·ch(E)ᵢ` for every bundle built from the
    /// tangent bundle.
    ///
    /// Compact geometries integrate against their own Todd class. The
    /// logarithmic geometry integrates against the Todd class of `P³`,
    /// `1 + 2ω + 11ω²/6 + ω³`, with every logarithmic class written as a
    /// multiple of the hyperplane class `ω`.
    pub fn integration_weights(&self) -> [Rational; 7] {
        match self.geometry {
            Geometry::LogP3(d) => {
                let d = int(d as i64);
                let c1 = int(4) - &d;
                let c2 = &d * &d - int(4) * &d + int(6);
                let td2 = rat(11, 6);
                let td1 = int(2);
                [
                    int(1),
                    &c1 * &td2,
                    &c1 * &c1 * &td1,
                    &c2 * &td1,
                    self.c1_cubed.clone(),
                    self.c1c2.clone(),
                    self.c3.clone(),
                ]
            }
            _ => {
                let td = todd();
                std::array::from_fn(|i| {
                    let mut basis = ChowElement::zero();
                    basis.c[i] = Rational::one();
                    (&basis * &td).degree(self)
                })
            }
        }
    }

    /// `χ = ∫ ch · td`.
    pub fn chi(&self, ch: &ChowElement) -> Rational {
        let w = self.integration_weights();
        ch.c.iter().zip(w.iter()).map(|(a, b)| a * b).sum()
    }
}

/// Coefficients of `c(T) = (1+h)^a / (1+d·h)` up to `h³`.
fn quotient_chern_classes(a: i64, d: i64) -> [Rational; 4] {
    std::array::from_fn(|k| {
        (0..=k)
            .map(|j| int(binomial(a, (k - j) as i64)) * int(-d).pow(j as i32))
            .sum()
    })
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Chern numbers of a smooth degree-`d` hypersurface in `P⁴`.
///
/// Closed forms `(5−d)³d`, `d(5−d)(d²−5d+10)`, `d(−d³+5d²−10d+10)`, checked
/// against `c(T_X)(1+dh) = (1+h)⁵` with `h³ = d`.
pub fn chern_numbers_hypersurface_p4(d: u64) -> ChernNumbers {
    let di = d as i64;
    let dq = int(di);
    let five = int(5) - &dq;
    let closed = ChernNumbers {
        c1_cubed: five.pow(3) * &dq,
        c1c2: &dq * &five * (&dq * &dq - int(5) * &dq + int(10)),
        c3: &dq * (-dq.pow(3) + int(5) * &dq * &dq - int(10) * &dq + int(10)),
        geometry: Geometry::HypersurfaceP4(d),
    };
    let c = quotient_chern_classes(5, di);
    let derived = (c[1].pow(3) * &dq, &c[1] * &c[2] * &dq, &c[3] * &dq);
    assert_eq!(
        closed.as_triple(),
        derived,
        "hypersurface closed forms disagree with the normal sequence"
    );
    closed
}

/// Euler number of a smooth degree-`d` surface in `P³`: `d(6 + d² − 4d)`.
pub fn euler_number_surface_p3(d: u64) -> Rational {
    let d = int(d as i64);
    &d * (int(6) + &d * &d - int(4) * &d)
}

/// Logarithmic Chern numbers of `(P³, X)` for a smooth surface `X` of degree `d`.
///
/// Closed forms `(4−d)³`, `(4−d)(d²−4d+6)`, `−d³+4d²−6d+4`, checked against
/// `c(T(−log X)) = (1+ω)⁴/(1+dω)` and `c̄₃ = e(P³) − e(X)`.
pub fn chern_numbers_log_p3(d: u64) -> ChernNumbers {
    let di = d as i64;
    let dq = int(di);
    let four = int(4) - &dq;
    let closed = ChernNumbers {
        c1_cubed: four.pow(3),
        c1c2: &four * (&dq * &dq - int(4) * &dq + int(6)),
        c3: -dq.pow(3) + int(4) * &dq * &dq - int(6) * &dq + int(4),
        geometry: Geometry::LogP3(d),
    };
    let c = quotient_chern_classes(4, di);
    let derived = (c[1].pow(3), &c[1] * &c[2], c[3].clone());
    assert_eq!(
        closed.as_triple(),
        derived,
        "log closed forms disagree with (1+ω)⁴/(1+dω)"
    );
    assert_eq!(
        closed.c3,
        int(4) - euler_number_surface_p3(d),
        "c̄₃ ≠ e(P³) − e(X)"
    );
    closed
}

/// Riemann–Roch on `P³` for a rank-`e` bundle with Chern classes
/// `d₁ω, d₂ω², d₃ω³`:
///
/// ```text
/// χ = (d₁³ − 3d₁d₂ + 3d₃)/6 + c₁(d₁² − 2d₂)/4 + (c₁² + c₂)d₁/12 + e·c₁c₂/24
/// ```
///
/// with `c₁ = 4`, `c₂ = 6` for `P³`.
pub fn chi_p3_bundle(d1: &Rational, d2: &Rational, d3: &Rational, rank: &Rational) -> Rational {
    let c1 = int(4);
    let c2 = int(6);
    (d1.pow(3) - int(3) * d1 * d2 + int(3) * d3) / int(6)
        + &c1 * (d1 * d1 - int(2) * d2) / int(4)
        + (&c1 * &c1 + &c2) * d1 / int(12)
        + rank * &c1 * &c2 / int(24)
}

/// Chern-root symbols `y₁, y₂, y₃` of the cotangent bundle.
fn root_table() -> &'static Arc<VariableTable> {
    static TABLE: OnceLock<Arc<VariableTable>> = OnceLock::new();
    TABLE.get_or_init(|| VariableTable::plain(&["y1", "y2", "y3"]).expect("static table"))
}

/// Rewrites a symmetric polynomial of degree ≤ 3 in the cotangent roots as a
/// Chow element in the tangent Chern classes.
///
/// Works through monomial symmetric functions:
/// `e₁² = m₂ + 2m₁₁`, `e₂ = m₁₁`, `e₁³ = m₃ + 3m₂₁ + 6m₁₁₁`,
/// `e₁e₂ = m₂₁ + 3m₁₁₁`, `e₃ = m₁₁₁`.
pub fn symmetric_to_chow(p: &Polynomial) -> ChowElement {
    let c = |e: [u32; 3]| p.coefficient(&Monomial::new(e.to_vec()));
    let m0 = c([0, 0, 0]);
    let m1 = c([1, 0, 0]);
    let (m2, m11) = (c([2, 0, 0]), c([1, 1, 0]));
    let (m3, m21, m111) = (c([3, 0, 0]), c([2, 1, 0]), c([1, 1, 1]));
    // in the e-basis
    let e1 = m1;
    let e1sq = m2.clone();
    let e2 = &m11 - &(&m2 * int(2));
    let e1cu = m3.clone();
    let e1e2 = &m21 - &(&m3 * int(3));
    let e3 = &m111 - &(&m3 * int(6)) - &(&e1e2 * int(3));
    // e₁ = −c₁, e₂ = c₂, e₃ = −c₃
    ChowElement::new([m0, -e1, e1sq, e2, -e1cu, -e1e2, -e3])
}

/// `Σ_w exp(⟨w, y⟩)` truncated at degree 3, over a multiset of integer weights.
fn character_of_weights<'a>(weights: impl IntoIterator<Item = &'a [i64; 3]>) -> ChowElement {
    let t = root_table();
    let ys: Vec<Polynomial> = (0..3).map(|v| Polynomial::var_index(t, v)).collect();
    let mut total = Polynomial::zero(t);
    for w in weights {
        let lin = (0..3).fold(Polynomial::zero(t), |acc, v| {
            &acc + &ys[v].scale(&int(w[v]))
        });
        let mut power = Polynomial::one(t);
        let mut fact = Rational::one();
        for p in 0..=3 {
            if p > 0 {
                power = &power * &lin;
                fact *= int(p);
            }
            total = &total + &power.scale(&(Rational::one() / &fact));
        }
    }
    symmetric_to_chow(&total)
}

/// Direct enumeration: `ch(S^r T*)` as the sum over `a+b+c = r` of
/// `exp(a y₁ + b y₂ + c y₃)`.
pub fn ch_sym_direct(r: i64) -> ChowElement {
    if r < 0 {
        return ChowElement::zero();
    }
    let mut weights = Vec::new();
    for a in 0..=r {
        for b in 0..=(r - a) {
            weights.push([a, b, r - a - b]);
        }
    }
    character_of_weights(weights.iter())
}

/// `ch(S^r T*)` as seven polynomials in `r` (degree ≤ 5), interpolated from
/// direct enumeration at `r = 0..=8` and validated at `r = 9..=12`.
pub struct SymPowerTable {
    coeffs: [UniPoly; 7],
}

impl SymPowerTable {
    fn build() -> Self {
        let samples: Vec<(i64, ChowElement)> = (0..=8).map(|r| (r, ch_sym_direct(r))).collect();
        let coeffs = std::array::from_fn(|slot| {
            let pts: Vec<(Rational, Rational)> = samples
                .iter()
                .map(|(r, ch)| (int(*r), ch.coeff(slot).clone()))
                .collect();
            UniPoly::interpolate(&pts)
        });
        let table = SymPowerTable { coeffs };
        for r in 9..=12 {
            assert_eq!(
                table.eval(r),
                ch_sym_direct(r),
                "interpolated S^r character fails at r = {r}"
            );
        }
        for (slot, p) in table.coeffs.iter().enumerate() {
            assert!(
                p.degree().is_none_or(|d| d <= 2 + BASIS_DEGREE[slot]),
                "unexpected degree in r"
            );
        }
        table
    }

    pub fn get() -> &'static SymPowerTable {
        static TABLE: OnceLock<SymPowerTable> = OnceLock::new();
        TABLE.get_or_init(SymPowerTable::build)
    }

    /// Value at `r`; zero for `r < 0`.
    pub fn eval(&self, r: i64) -> ChowElement {
        if r < 0 {
            return ChowElement::zero();
        }
        let x = int(r);
        ChowElement::new(std::array::from_fn(|i| self.coeffs[i].eval(&x)))
    }

    pub fn polynomial(&self, slot: usize) -> &UniPoly {
        &self.coeffs[slot]
    }
}

/// `ch(S^r T*ₓ)`; the zero character for `r < 0`.
pub fn ch_sym_truncated(r: i64) -> TruncatedCh {
    TruncatedCh(SymPowerTable::get().eval(r))
}

/// Determinant of a 3×3 matrix over the truncated Chow ring.
pub fn det3(m: &[[ChowElement; 3]; 3]) -> ChowElement {
    let minor = |r1: usize, r2: usize, a: usize, b: usize| {
        &(&m[r1][a] * &m[r2][b]) - &(&m[r1][b] * &m[r2][a])
    };
    let t0 = &m[0][0] * &minor(1, 2, 1, 2);
    let t1 = &m[0][1] * &minor(1, 2, 0, 2);
    let t2 = &m[0][2] * &minor(1, 2, 0, 1);
    &(&t0 - &t1) + &t2
}

/// `ch(Γ^λ T*ₓ)` by the Jacobi–Trudi determinant `det(h_{λᵢ+j−i})`.
/// Length-2 signatures are padded with a zero.
pub fn ch_schur(sig: &Signature) -> TruncatedCh {
    let l = sig.as_triple();
    let h = SymPowerTable::get();
    let m: [[ChowElement; 3]; 3] =
        std::array::from_fn(|i| std::array::from_fn(|j| h.eval(l[i] + j as i64 - i as i64)));
    TruncatedCh(det3(&m))
}

/// Weights of `Γ^λ` of a 3-space, one per Gelfand–Tsetlin pattern.
pub fn gelfand_tsetlin_weights(sig: &Signature) -> Vec<[i64; 3]> {
    let [l1, l2, l3] = sig.as_triple();
    let mut out = Vec::new();
    for m1 in l2..=l1 {
        for m2 in l3..=l2 {
            for n1 in m2..=m1 {
                out.push([n1, m1 + m2 - n1, l1 + l2 + l3 - m1 - m2]);
            }
        }
    }
    out
}

/// `ch(Γ^λ T*ₓ)` by summing `exp(⟨w, y⟩)` over Gelfand–Tsetlin weights.
pub fn ch_schur_weights(sig: &Signature) -> TruncatedCh {
    TruncatedCh(character_of_weights(gelfand_tsetlin_weights(sig).iter()))
}

/// `χ(X, Γ^λ T*ₓ)` by Riemann–Roch.
pub fn chi_schur(sig: &Signature, cn: &ChernNumbers) -> Rational {
    cn.chi(ch_schur(sig).element())
}

/// `ch(K) = ch(det T*) = exp(−c₁)`.
pub fn ch_canonical() -> ChowElement {
    ChowElement::exp_c1(&int(-1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::weyl_dim;

    fn sig(p: &[i64]) -> Signature {
        Signature::new(p.to_vec()).unwrap()
    }

    #[test]
    fn hypersurface_numbers() {
        assert_eq!(
            chern_numbers_hypersurface_p4(1).as_triple(),
            (int(64), int(24), int(4))
        );
        assert_eq!(
            chern_numbers_hypersurface_p4(5).as_triple(),
            (int(0), int(0), int(-200))
        );
        assert_eq!(
            chern_numbers_hypersurface_p4(6).as_triple(),
            (int(-6), int(-96), int(-516))
        );
    }

    #[test]
    fn log_numbers() {
        assert_eq!(
            chern_numbers_log_p3(0).as_triple(),
            (int(64), int(24), int(4))
        );
        assert_eq!(
            chern_numbers_log_p3(4).as_triple(),
            (int(0), int(0), int(-20))
        );
        assert_eq!(
            chern_numbers_log_p3(1).as_triple(),
            (int(27), int(9), int(1))
        );
        assert_eq!(euler_number_surface_p3(4), int(24));
    }

    #[test]
    fn sym_powers() {
        let h0 = ch_sym_truncated(0);
        assert_eq!(h0.element(), &ChowElement::one());
        let h1 = ch_sym_truncated(1);
        let expect =
            ChowElement::from_ratios([(3, 1), (-1, 1), (1, 2), (-1, 1), (-1, 6), (1, 2), (-1, 2)]);
        assert_eq!(h1.element(), &expect);
        let h2 = ch_sym_truncated(2);
        assert_eq!(h2.rank(), int(6));
        assert_eq!(h2.element().coeff(1), &int(-4));
        assert!(ch_sym_truncated(-1).element().is_zero());
        assert!(ch_sym_truncated(-2).element().is_zero());
    }

    #[test]
    fn sym_power_polynomials_vanish_at_minus_one_and_two() {
        let t = SymPowerTable::get();
        for slot in 0..7 {
            assert_eq!(t.polynomial(slot).eval(&int(-1)), int(0));
            assert_eq!(t.polynomial(slot).eval(&int(-2)), int(0));
        }
    }

    #[test]
    fn schur_basics() {
        assert_eq!(ch_schur(&sig(&[0, 0, 0])).element(), &ChowElement::one());
        assert_eq!(ch_schur(&sig(&[1, 1, 1])).element(), &ch_canonical());
        assert_eq!(ch_schur(&sig(&[1, 0, 0])), ch_sym_truncated(1));
        assert_eq!(ch_schur(&sig(&[2, 1])).rank(), int(8));
    }

    #[test]
    fn schur_rank_is_weyl_dim() {
        for l1 in 0..=10 {
            for l2 in 0..=l1 {
                for l3 in 0..=l2 {
                    let s = sig(&[l1, l2, l3]);
                    assert_eq!(ch_schur(&s).rank(), int(weyl_dim(&s) as i64), "{s}");
                }
            }
        }
    }

    #[test]
    fn jacobi_trudi_matches_weight_enumeration_small() {
        for l1 in 0..=3 {
            for l2 in 0..=l1 {
                for l3 in 0..=l2 {
                    let s = sig(&[l1, l2, l3]);
                    assert_eq!(ch_schur(&s), ch_schur_weights(&s), "{s}");
                }
            }
        }
    }

    #[test]
    fn todd_and_structure_sheaf() {
        let t = todd();
        assert_eq!(
            t.part(3),
            ChowElement::from_ratios([(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (1, 24), (0, 1)])
        );
        let trivial = sig(&[0, 0, 0]);
        assert_eq!(
            chi_schur(&trivial, &chern_numbers_hypersurface_p4(1)),
            int(1)
        );
        assert_eq!(
            chi_schur(&trivial, &chern_numbers_hypersurface_p4(5)),
            int(0)
        );
        assert_eq!(chi_schur(&trivial, &chern_numbers_log_p3(7)), int(1));
    }

    #[test]
    fn cotangent_of_p3() {
        let omega = sig(&[1, 0, 0]);
        assert_eq!(
            chi_schur(&omega, &chern_numbers_hypersurface_p4(1)),
            int(-1)
        );
        assert_eq!(chi_schur(&omega, &chern_numbers_log_p3(0)), int(-1));
        assert_eq!(chi_p3_bundle(&int(-4), &int(6), &int(-4), &int(3)), int(-1));
        assert_eq!(chi_p3_bundle(&int(0), &int(0), &int(0), &int(1)), int(1));
        assert_eq!(chi_p3_bundle(&int(-4), &int(0), &int(0), &int(1)), int(-1));
    }

    #[test]
    fn log_cotangent_matches_p3_riemann_roch() {
        for d in 0..=12u64 {
            let cn = chern_numbers_log_p3(d);
            let by_schur = chi_schur(&sig(&[1, 0, 0]), &cn);
            // c(T̄*) has d₁ = −c̄₁, d₂ = c̄₂, d₃ = −c̄₃ in hyperplane units
            let dq = int(d as i64);
            let d1 = &dq - int(4);
            let d2 = &dq * &dq - int(4) * &dq + int(6);
            let d3 = -&cn.c3;
            assert_eq!(by_schur, chi_p3_bundle(&d1, &d2, &d3, &int(3)), "d = {d}");
            // χ(T̄*) = χ(O_X) + χ(Ω_P³) = d³/6 − d² + 11d/6 − 1
            let expect = dq.pow(3) / int(6) - &dq * &dq + rat(11, 6) * &dq - int(1);
            assert_eq!(by_schur, expect, "d = {d}");
        }
    }

    #[test]
    fn canonical_twist() {
        let cn = chern_numbers_hypersurface_p4(7);
        for p in [[2, 1, 0], [3, 0, 0], [4, 2, 1]] {
            let s = sig(&p);
            let shifted = s.shifted(1).unwrap();
            let twisted = ch_schur(&s).element() * &ch_canonical();
            assert_eq!(ch_schur(&shifted).element(), &twisted);
            assert_eq!(chi_schur(&shifted, &cn), cn.chi(&twisted));
        }
    }
}
