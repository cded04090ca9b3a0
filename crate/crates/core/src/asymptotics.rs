//! Euler characteristics of jet-differential bundles and their growth in the
//! jet degree `m`.
//!
//! For every bundle family the Chern character of the graded bundle,
//! `S(m) = Σ ch(graded piece)`, is independent of the geometry; the Euler
//! characteristic is `χ(m) = ⟨w, S(m)⟩` with the geometry's integration
//! weights. `S(m)` is summed exactly with a scaled-integer fast path
//! (divided-power coordinates `p!·ch_p`, 128-bit products with overflow
//! checks, arbitrary-precision accumulation). A slow path summing
//! [`ch_schur`](crate::intersection::ch_schur) rationals term by term is kept
//! for cross-checks.
//!
//! Leading coefficients come from exact finite differences along an
//! arithmetic progression `m₀ + jP`: the `D`-th difference divided by
//! `D!·P^D`. The `(D+1)`-th difference is required to vanish and a second
//! residue class must give the same value.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec;
use crate::interp::{forward_difference, UniPoly};
use crate::intersection::{
    ch_schur, ch_sym_truncated, chern_numbers_hypersurface_p4, chern_numbers_log_p3, ChernNumbers,
    ChowElement, Geometry, SymPowerTable, BASIS_DEGREE,
};
use crate::poly::{int, Rational};
use crate::rep::{self, Signature};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    /// Invariant (Demailly–Semple) jet differentials.
    Ds,
    /// All jet differentials (Green–Griffiths).
    Gg,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Flavor::Ds => write!(f, "ds"),
            Flavor::Gg => write!(f, "gg"),
        }
    }
}

/// A bundle family up to the choice of geometry: flavor and jet order.
/// Order 1 is `S^m T*` whatever the flavor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Family {
    pub flavor: Flavor,
    pub k: u8,
}

impl Family {
    pub fn new(flavor: Flavor, k: u8) -> Result<Self> {
        if !(1..=3).contains(&k) {
            return Err(Error::usage(format!(
                "jet order must be 1, 2 or 3, got {k}"
            )));
        }
        let flavor = if k == 1 { Flavor::Ds } else { flavor };
        Ok(Family { flavor, k })
    }

    /// Growth order of `χ` in `m`.
    pub fn degree(&self) -> usize {
        match (self.flavor, self.k) {
            (_, 1) => 5,
            (Flavor::Ds, 2) => 7,
            (Flavor::Gg, 2) => 8,
            (Flavor::Ds, 3) => 9,
            (Flavor::Gg, 3) => 11,
            _ => unreachable!("k is validated"),
        }
    }

    /// Step of the progression used for finite differences: a multiple of
    /// every modulus in the index-set constraints.
    pub fn period(&self) -> u64 {
        match (self.flavor, self.k) {
            (_, 1) => 1,
            (Flavor::Ds, 2) => 6,
            (Flavor::Ds, _) => 60,
            (Flavor::Gg, _) => 6,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} k={}", self.flavor, self.k)
    }
}

/// The two geometries with closed-form Chern numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GeometryKind {
    HypersurfaceP4,
    LogP3,
}

impl GeometryKind {
    pub fn at(&self, d: u64) -> ChernNumbers {
        match self {
            GeometryKind::HypersurfaceP4 => chern_numbers_hypersurface_p4(d),
            GeometryKind::LogP3 => chern_numbers_log_p3(d),
        }
    }

    /// First interpolation node in `d`.
    pub fn first_node(&self) -> u64 {
        match self {
            GeometryKind::HypersurfaceP4 => 7,
            GeometryKind::LogP3 => 1,
        }
    }
}

impl fmt::Display for GeometryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometryKind::HypersurfaceP4 => write!(f, "hypersurface-p4"),
            GeometryKind::LogP3 => write!(f, "log-p3"),
        }
    }
}

/// A concrete jet bundle: family plus geometry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JetBundleSpec {
    pub family: Family,
    pub geometry: Geometry,
}

impl JetBundleSpec {
    pub fn new(flavor: Flavor, k: u8, kind: GeometryKind, d: u64) -> Result<Self> {
        Ok(JetBundleSpec {
            family: Family::new(flavor, k)?,
            geometry: kind.at(d).geometry,
        })
    }

    pub fn chern_numbers(&self) -> Result<ChernNumbers> {
        match self.geometry {
            Geometry::HypersurfaceP4(d) => Ok(chern_numbers_hypersurface_p4(d)),
            Geometry::LogP3(d) => Ok(chern_numbers_log_p3(d)),
            Geometry::Explicit => Err(Error::usage("jet bundle geometry must be a preset")),
        }
    }
}

/// Chern character of a graded jet bundle and the number of graded pieces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterSum {
    pub ch: ChowElement,
    pub terms: u64,
}

const FACT: [i128; 7] = [1, 1, 2, 2, 6, 6, 6];

/// `ch(S^r T*)` in divided-power coordinates: slot `i` holds
/// `deg(i)! · coefficient`, always an integer.
type Scaled = [i128; 7];

fn overflow(what: &str) -> Error {
    Error::Overflow(what.to_string())
}

fn scaled_mul(u: &Scaled, v: &Scaled) -> Result<Scaled> {
    let m = |a: i128, b: i128| a.checked_mul(b).ok_or_else(|| overflow("product"));
    let a = |x: i128, y: i128| x.checked_add(y).ok_or_else(|| overflow("sum"));
    Ok([
        m(u[0], v[0])?,
        a(m(u[0], v[1])?, m(u[1], v[0])?)?,
        a(a(m(u[0], v[2])?, m(u[2], v[0])?)?, m(2, m(u[1], v[1])?)?)?,
        a(m(u[0], v[3])?, m(u[3], v[0])?)?,
        a(
            a(m(u[0], v[4])?, m(u[4], v[0])?)?,
            m(3, a(m(u[1], v[2])?, m(u[2], v[1])?)?)?,
        )?,
        a(
            a(m(u[0], v[5])?, m(u[5], v[0])?)?,
            m(3, a(m(u[1], v[3])?, m(u[3], v[1])?)?)?,
        )?,
        a(m(u[0], v[6])?, m(u[6], v[0])?)?,
    ])
}

fn scaled_sub(u: &Scaled, v: &Scaled) -> Result<Scaled> {
    let mut out = [0i128; 7];
    for i in 0..7 {
        out[i] = u[i]
            .checked_sub(v[i])
            .ok_or_else(|| overflow("difference"))?;
    }
    Ok(out)
}

fn scaled_add(u: &Scaled, v: &Scaled) -> Result<Scaled> {
    let mut out = [0i128; 7];
    for i in 0..7 {
        out[i] = u[i].checked_add(v[i]).ok_or_else(|| overflow("sum"))?;
    }
    Ok(out)
}

fn scaled_det3(m: [[&Scaled; 3]; 3]) -> Result<Scaled> {
    let minor = |a: usize, b: usize| -> Result<Scaled> {
        scaled_sub(
            &scaled_mul(m[1][a], m[2][b])?,
            &scaled_mul(m[1][b], m[2][a])?,
        )
    };
    let t0 = scaled_mul(m[0][0], &minor(1, 2)?)?;
    let t1 = scaled_mul(m[0][1], &minor(0, 2)?)?;
    let t2 = scaled_mul(m[0][2], &minor(0, 1)?)?;
    scaled_add(&scaled_sub(&t0, &t1)?, &t2)
}

/// Scaled `ch(S^r T*)` for `r` in `-2..=max`.
struct ScaledSymTable {
    values: Vec<Scaled>,
}

impl ScaledSymTable {
    fn new(max: i64) -> Result<Self> {
        let table = SymPowerTable::get();
        let mut values = vec![[0i128; 7], [0i128; 7]];
        for r in 0..=max {
            let ch = table.eval(r);
            let mut s = [0i128; 7];
            for (i, slot) in s.iter_mut().enumerate() {
                let scaled = ch.coeff(i) * int(FACT[i] as i64);
                if !scaled.is_integer() {
                    return Err(Error::Verification(format!(
                        "divided-power coordinate of S^{r} is not integral"
                    )));
                }
                *slot =
                    i128::try_from(scaled.numer().clone()).map_err(|_| overflow("table entry"))?;
            }
            values.push(s);
        }
        Ok(ScaledSymTable { values })
    }

    fn h(&self, r: i64) -> &Scaled {
        if r < 0 {
            &self.values[0]
        } else {
            &self.values[(r + 2) as usize]
        }
    }

    fn schur(&self, l: [i64; 3]) -> Result<Scaled> {
        let row = |i: usize| {
            [
                self.h(l[i] - i as i64),
                self.h(l[i] + 1 - i as i64),
                self.h(l[i] + 2 - i as i64),
            ]
        };
        scaled_det3([row(0), row(1), row(2)])
    }
}

/// Exact accumulator: 128-bit running sums flushed into big integers.
struct Accumulator {
    small: Scaled,
    big: [BigInt; 7],
    terms: u64,
}

impl Accumulator {
    fn new() -> Self {
        Accumulator {
            small: [0; 7],
            big: std::array::from_fn(|_| BigInt::zero()),
            terms: 0,
        }
    }

    fn push(&mut self, v: &Scaled) {
        self.terms += 1;
        for ((small, big), &x) in self.small.iter_mut().zip(&mut self.big).zip(v) {
            match small.checked_add(x) {
                Some(s) => *small = s,
                None => {
                    *big += BigInt::from(*small);
                    *small = x;
                }
            }
        }
    }

    fn finish(mut self) -> ([BigInt; 7], u64) {
        for i in 0..7 {
            self.big[i] += BigInt::from(self.small[i]);
        }
        (self.big, self.terms)
    }
}

fn unscale(big: [BigInt; 7]) -> ChowElement {
    ChowElement::new(std::array::from_fn(|i| {
        Rational::new(big[i].clone(), BigInt::from(FACT[i]))
    }))
}

/// `Σ ch(graded piece)` over the decomposition of the weight-`m` jet bundle,
/// fast path.
pub fn character_sum(family: Family, m: u64) -> Result<CharacterSum> {
    static CACHE: OnceLock<Mutex<HashMap<(Family, u64), CharacterSum>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().expect("cache lock").get(&(family, m)) {
        return Ok(hit.clone());
    }
    let sum = character_sum_uncached(family, m)?;
    cache
        .lock()
        .expect("cache lock")
        .insert((family, m), sum.clone());
    Ok(sum)
}

fn character_sum_uncached(family: Family, m: u64) -> Result<CharacterSum> {
    let table = ScaledSymTable::new(m as i64 + 2)?;
    let (big, terms) = match (family.flavor, family.k) {
        (_, 1) => {
            let mut acc = Accumulator::new();
            acc.push(table.h(m as i64));
            acc.finish()
        }
        (Flavor::Ds, 2) => {
            let mut acc = Accumulator::new();
            let mut err = None;
            rep::visit_ds2(m, |l| match table.schur(l) {
                Ok(v) => acc.push(&v),
                Err(e) => err = Some(e),
            });
            if let Some(e) = err {
                return Err(e);
            }
            acc.finish()
        }
        (Flavor::Ds, _) => {
            let gammas: Vec<u64> = (0..=m / 5).collect();
            let table = &table;
            let parts = exec::map_ordered(gammas, |gamma| -> Result<([BigInt; 7], u64)> {
                let mut acc = Accumulator::new();
                let mut err = None;
                visit_ds3_gamma(m, gamma, |l| match table.schur(l) {
                    Ok(v) => acc.push(&v),
                    Err(e) => err = Some(e),
                });
                match err {
                    Some(e) => Err(e),
                    None => Ok(acc.finish()),
                }
            });
            let mut big: [BigInt; 7] = std::array::from_fn(|_| BigInt::zero());
            let mut terms = 0;
            for part in parts {
                let (b, t) = part?;
                for i in 0..7 {
                    big[i] += &b[i];
                }
                terms += t;
            }
            (big, terms)
        }
        (Flavor::Gg, k) => {
            let mut acc = Accumulator::new();
            let mut err = None;
            rep::visit_gg(k as usize, m, |l| {
                let r = l.iter().try_fold([1i128, 0, 0, 0, 0, 0, 0], |p, &li| {
                    scaled_mul(&p, table.h(li as i64))
                });
                match r {
                    Ok(v) => acc.push(&v),
                    Err(e) => err = Some(e),
                }
            })?;
            if let Some(e) = err {
                return Err(e);
            }
            acc.finish()
        }
    };
    Ok(CharacterSum {
        ch: unscale(big),
        terms,
    })
}

/// The `gamma`-slice of the order-3 index set.
fn visit_ds3_gamma(m: u64, gamma: u64, mut f: impl FnMut([i64; 3])) {
    // Same walk as rep::visit_ds3_dim3 restricted to one gamma.
    let n = (m - gamma) as i64;
    let g = gamma as i64;
    for l1 in (0..=n).rev() {
        let rest = n - l1;
        let mut l2 = (rest / 2).min(l1 - g);
        while l2 >= 0 {
            let r3 = rest - 2 * l2;
            if r3 % 3 == 0 {
                let l3 = r3 / 3;
                if l2 - l3 < g {
                    break;
                }
                f([l1, l2, l3]);
            }
            l2 -= 1;
        }
    }
}

/// Slow path: exact rational Jacobi–Trudi (or symmetric-power products) per
/// graded piece.
pub fn character_sum_exact(family: Family, m: u64) -> Result<CharacterSum> {
    let mut total = ChowElement::zero();
    let mut terms = 0u64;
    match (family.flavor, family.k) {
        (_, 1) => {
            total = ch_sym_truncated(m as i64).0;
            terms = 1;
        }
        (Flavor::Ds, 2) => {
            for t in rep::enumerate_ds2(m) {
                total = &total + ch_schur(&t.signature).element();
                terms += 1;
            }
        }
        (Flavor::Ds, _) => {
            for t in rep::enumerate_ds3_dim3(m) {
                total = &total + ch_schur(&t.signature).element();
                terms += 1;
            }
        }
        (Flavor::Gg, k) => {
            for t in rep::enumerate_gg(k as usize, m)? {
                let prod = t.degrees.iter().fold(ChowElement::one(), |acc, &l| {
                    &acc * ch_sym_truncated(l as i64).element()
                });
                total = &total + &prod;
                terms += 1;
            }
        }
    }
    Ok(CharacterSum { ch: total, terms })
}

/// `χ(X, E_m)` for the jet bundle of weight `m`.
pub fn chi_jets_exact(spec: &JetBundleSpec, m: u64) -> Result<Rational> {
    let cn = spec.chern_numbers()?;
    Ok(cn.chi(&character_sum(spec.family, m)?.ch))
}

/// Geometry-independent top coefficient of `S(m)` for a family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyLeading {
    pub family: Family,
    pub degree: usize,
    pub period: u64,
    /// Starting points of the two progressions that were compared.
    pub residue_starts: [u64; 2],
    /// Top coefficient of `S(m)`; only degree-3 slots can be nonzero.
    pub leading: ChowElement,
}

/// Start of the first progression.
pub const M0: u64 = 120;

/// Computes the family's leading coefficient by finite differences on two
/// residue classes, checking the growth degree on each.
pub fn family_leading(family: Family) -> Result<FamilyLeading> {
    static CACHE: OnceLock<Mutex<HashMap<Family, FamilyLeading>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().expect("cache lock").get(&family) {
        return Ok(hit.clone());
    }
    let computed = compute_family_leading(family)?;
    cache
        .lock()
        .expect("cache lock")
        .insert(family, computed.clone());
    Ok(computed)
}

/// One residue class: `D`-th and `(D+1)`-th differences of `S(start + jP)`.
#[derive(Debug, Clone)]
pub struct DifferenceProbe {
    pub start: u64,
    pub leading: ChowElement,
    pub next_difference: ChowElement,
}

/// Differences of `S` along `start, start + P, ..., start + (D+1)P`.
pub fn probe(family: Family, start: u64) -> Result<DifferenceProbe> {
    let d = family.degree();
    let p = family.period();
    let ms: Vec<u64> = (0..=d as u64 + 1).map(|j| start + j * p).collect();
    let values = ms
        .into_iter()
        .map(|m| character_sum(family, m).map(|s| s.ch))
        .collect::<Result<Vec<_>>>()?;
    let scale = int(p as i64).pow(d as i32) * factorial(d);
    let top = forward_difference(&values, d).scale(&(Rational::from_integer(1.into()) / scale));
    let next = forward_difference(&values, d + 1);
    Ok(DifferenceProbe {
        start,
        leading: top,
        next_difference: next,
    })
}

fn factorial(n: usize) -> Rational {
    (1..=n as i64).map(int).product()
}

fn compute_family_leading(family: Family) -> Result<FamilyLeading> {
    let starts = [M0, M0 + 1];
    let probes = exec::map_ordered(starts.to_vec(), |s| probe(family, s));
    let mut results = Vec::new();
    for p in probes {
        let p = p?;
        if !p.next_difference.is_zero() {
            return Err(Error::DegreeClaim(format!(
                "{family}: difference of order {} from m = {} is {} (not zero)",
                family.degree() + 1,
                p.start,
                p.next_difference
            )));
        }
        results.push(p);
    }
    if results[0].leading != results[1].leading {
        return Err(Error::DegreeClaim(format!(
            "{family}: leading coefficients differ between m ≡ {} and m ≡ {} (mod {}): {} vs {}",
            starts[0] % family.period(),
            starts[1] % family.period(),
            family.period(),
            results[0].leading,
            results[1].leading
        )));
    }
    let leading = results.swap_remove(0).leading;
    debug_assert!((0..7).all(|i| BASIS_DEGREE[i] == 3 || leading.coeff(i).is_zero()));
    Ok(FamilyLeading {
        family,
        degree: family.degree(),
        period: family.period(),
        residue_starts: starts,
        leading,
    })
}

/// Leading coefficient of `χ(X, E_m)` in `m` for a concrete bundle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeadingCoefficient {
    pub degree: usize,
    #[serde(serialize_with = "ser_rational")]
    pub value: Rational,
    pub residue_class_used: u64,
    pub period: u64,
}

fn ser_rational<S: serde::Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&crate::poly::fmt_rational(q))
}

pub fn leading_coefficient(spec: &JetBundleSpec) -> Result<LeadingCoefficient> {
    let fam = family_leading(spec.family)?;
    let cn = spec.chern_numbers()?;
    Ok(LeadingCoefficient {
        degree: fam.degree,
        value: cn.chi(&fam.leading),
        residue_class_used: fam.residue_starts[0] % fam.period,
        period: fam.period,
    })
}

/// Leading coefficient as an exact polynomial in the degree `d`:
/// interpolated on five nodes and validated on two more.
pub fn leading_coefficient_poly_in_d(family: Family, kind: GeometryKind) -> Result<UniPoly> {
    let fam = family_leading(family)?;
    let value = |d: u64| kind.at(d).chi(&fam.leading);
    let d0 = kind.first_node();
    let nodes: Vec<(Rational, Rational)> =
        (d0..d0 + 5).map(|d| (int(d as i64), value(d))).collect();
    let poly = UniPoly::interpolate(&nodes);
    for d in d0 + 5..d0 + 7 {
        let v = value(d);
        if poly.eval(&int(d as i64)) != v {
            return Err(Error::Verification(format!(
                "{family} on {kind}: interpolated polynomial disagrees at d = {d}"
            )));
        }
    }
    Ok(poly)
}

/// Outcome of a positivity search over a range of degrees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Threshold {
    pub family: Family,
    pub geometry: GeometryKind,
    pub range: (u64, u64),
    /// Smallest `d` such that the leading coefficient is positive for every
    /// degree from `d` to the end of the range; `None` if it is not positive
    /// at the end of the range.
    pub threshold: Option<u64>,
    /// Signs `(d, sign)` just below and at the threshold.
    pub boundary: Vec<(u64, i8)>,
}

pub fn positivity_threshold(
    family: Family,
    kind: GeometryKind,
    range: (u64, u64),
) -> Result<Threshold> {
    let (lo, hi) = range;
    if lo > hi {
        return Err(Error::usage(format!("empty degree range {lo}..={hi}")));
    }
    let fam = family_leading(family)?;
    let sign = |d: u64| -> i8 {
        let v = kind.at(d).chi(&fam.leading);
        if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        }
    };
    let mut threshold = None;
    let mut d = hi;
    loop {
        if sign(d) <= 0 {
            break;
        }
        threshold = Some(d);
        if d == lo {
            break;
        }
        d -= 1;
    }
    let boundary = match threshold {
        Some(t) if t > lo => vec![(t - 1, sign(t - 1)), (t, sign(t))],
        Some(t) => vec![(t, sign(t))],
        None => vec![(hi, sign(hi))],
    };
    Ok(Threshold {
        family,
        geometry: kind,
        range,
        threshold,
        boundary,
    })
}

/// Sign of the leading coefficient at every degree of the range.
pub fn leading_signs(
    family: Family,
    kind: GeometryKind,
    range: (u64, u64),
) -> Result<Vec<(u64, i8)>> {
    let fam = family_leading(family)?;
    Ok((range.0..=range.1)
        .map(|d| {
            let v = kind.at(d).chi(&fam.leading);
            (
                d,
                if v.is_positive() {
                    1
                } else if v.is_negative() {
                    -1
                } else {
                    0
                },
            )
        })
        .collect())
}

/// The signature `(m, 0, 0)`.
pub fn sym_signature(m: u64) -> Signature {
    Signature::triple(m as i64, 0, 0).expect("(m,0,0) is a signature")
}
