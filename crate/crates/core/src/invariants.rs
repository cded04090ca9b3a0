//! The order-3 jet ring `C[f_i′, f_i″, f_i‴]`, the reparametrization
//! derivations, the invariant generators, and brute-force oracles that
//! measure invariant and highest-weight dimensions directly.
//!
//! The truncated reparametrization group `φ(t) = t + b₂t² + b₃t³` acts by
//!
//! ```text
//! f′ ↦ f′,   f″ ↦ f″ + 2b₂f′,   f‴ ↦ f‴ + 6b₂f″ + 6b₃f′
//! ```
//!
//! At order 3 this group is abelian and unipotent, so a polynomial is
//! invariant exactly when both infinitesimal generators `D_b2`, `D_b3` kill it.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::check::Check;
use crate::error::{Error, Result};
use crate::exec;
use crate::linalg;
use crate::poly::{int, Derivation, Monomial, Polynomial, Rational, VariableSpec, VariableTable};

/// Jet order handled by this module.
pub const JET_ORDER: usize = 3;

/// Largest weight the oracles accept for `n = 3` without an override.
pub const MAX_ORDER_DIM3: u64 = 16;
/// Largest weight the oracles accept for `n = 2` without an override.
pub const MAX_ORDER_DIM2: u64 = 24;

/// Seed used when the caller does not pick one.
pub const DEFAULT_SEED: u64 = 0x5eed_2004;

/// Polynomial ring in the jet coordinates `f_i^{(r)}`, `1 ≤ i ≤ n`, `1 ≤ r ≤ 3`.
#[derive(Debug, Clone)]
pub struct JetRing {
    n: usize,
    table: Arc<VariableTable>,
}

impl JetRing {
    pub fn new(n: usize) -> Result<Self> {
        if n != 2 && n != 3 {
            return Err(Error::usage(format!(
                "ambient dimension must be 2 or 3, got {n}"
            )));
        }
        let mut specs = Vec::with_capacity(n * JET_ORDER);
        for i in 1..=n {
            for r in 1..=JET_ORDER {
                let mut gl = vec![0; n];
                gl[i - 1] = 1;
                specs.push(VariableSpec::new(jet_name(i, r), r as u32, gl));
            }
        }
        Ok(JetRing {
            n,
            table: VariableTable::new(specs)?,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        &self.table
    }

    /// Index of `f_i^{(r)}` (both 1-based) in the variable table.
    pub fn var_index(&self, i: usize, r: usize) -> usize {
        debug_assert!((1..=self.n).contains(&i) && (1..=JET_ORDER).contains(&r));
        (i - 1) * JET_ORDER + (r - 1)
    }

    /// The coordinate `f_i^{(r)}`.
    pub fn jet(&self, i: usize, r: usize) -> Polynomial {
        Polynomial::var_index(&self.table, self.var_index(i, r))
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if (1..=self.n).contains(&i) {
            Ok(())
        } else {
            Err(Error::usage(format!(
                "index {i} outside 1..={} for dimension {}",
                self.n, self.n
            )))
        }
    }

    /// `(D_b2, D_b3)`: `D_b2` sends `f″ ↦ 2f′`, `f‴ ↦ 6f″`; `D_b3` sends `f‴ ↦ 6f′`.
    pub fn reparam_derivations(&self) -> (Derivation, Derivation) {
        let mut d2 = Derivation::new(&self.table);
        let mut d3 = Derivation::new(&self.table);
        for i in 1..=self.n {
            d2 = d2
                .with_image(self.var_index(i, 2), self.jet(i, 1).scale(&int(2)))
                .and_then(|d| d.with_image(self.var_index(i, 3), self.jet(i, 2).scale(&int(6))))
                .expect("indices are in range");
            d3 = d3
                .with_image(self.var_index(i, 3), self.jet(i, 1).scale(&int(6)))
                .expect("indices are in range");
        }
        (d2, d3)
    }

    /// For each `i < j`, the derivation `R_ij : f_j^{(r)} ↦ f_i^{(r)}`, the
    /// infinitesimal action of an upper unipotent element of `GL_n`.
    pub fn raising_derivations(&self) -> Vec<RaisingDerivation> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in (i + 1)..=self.n {
                let mut d = Derivation::new(&self.table);
                for r in 1..=JET_ORDER {
                    d = d
                        .with_image(self.var_index(j, r), self.jet(i, r))
                        .expect("indices are in range");
                }
                out.push(RaisingDerivation {
                    i,
                    j,
                    derivation: d,
                });
            }
        }
        out
    }

    /// `w_ij = f_i′f_j″ − f_i″f_j′`.
    pub fn wedge(&self, i: usize, j: usize) -> Result<Polynomial> {
        self.check_index(i)?;
        self.check_index(j)?;
        Ok(&(&self.jet(i, 1) * &self.jet(j, 2)) - &(&self.jet(i, 2) * &self.jet(j, 1)))
    }

    /// `w_ij^k = f_k′(f_i′f_j‴ − f_i‴f_j′) − 3f_k″(f_i′f_j″ − f_i″f_j′)`.
    pub fn wedge_k(&self, i: usize, j: usize, k: usize) -> Result<Polynomial> {
        self.check_index(k)?;
        let w = self.wedge(i, j)?;
        let third = &(&self.jet(i, 1) * &self.jet(j, 3)) - &(&self.jet(i, 3) * &self.jet(j, 1));
        Ok(&(&self.jet(k, 1) * &third) - &(&self.jet(k, 2) * &w).scale(&int(3)))
    }

    /// Determinant of the 3×3 matrix whose rows are `f′`, `f″`, `f‴`.
    pub fn wronskian(&self) -> Result<Polynomial> {
        if self.n != 3 {
            return Err(Error::usage("the Wronskian generator needs dimension 3"));
        }
        let row = |r: usize| [self.jet(1, r), self.jet(2, r), self.jet(3, r)];
        let (a, b, c) = (row(1), row(2), row(3));
        let minor = |x: usize, y: usize| &(&b[x] * &c[y]) - &(&b[y] * &c[x]);
        let t0 = &a[0] * &minor(1, 2);
        let t1 = &a[1] * &minor(0, 2);
        let t2 = &a[2] * &minor(0, 1);
        Ok(&(&t0 - &t1) + &t2)
    }

    /// Monomials of reparametrization weight exactly `m`.
    pub fn weight_basis(&self, m: u64) -> Vec<Monomial> {
        let nv = self.table.len();
        let weights: Vec<u64> = (0..nv)
            .map(|v| self.table.reparam_weight(v) as u64)
            .collect();
        let mut out = Vec::new();
        let mut cur = vec![0u32; nv];
        fn rec(v: usize, rem: u64, w: &[u64], cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if v == w.len() {
                if rem == 0 {
                    out.push(Monomial::new(cur.clone()));
                }
                return;
            }
            for e in 0..=rem / w[v] {
                cur[v] = e as u32;
                rec(v + 1, rem - e * w[v], w, cur, out);
            }
            cur[v] = 0;
        }
        rec(0, m, &weights, &mut cur, &mut out);
        out
    }

    /// Substitution realizing the group element `(b₂, b₃)`.
    pub fn group_action(&self, b2: &Rational, b3: &Rational) -> BTreeMap<usize, Polynomial> {
        let mut images = BTreeMap::new();
        for i in 1..=self.n {
            let f1 = self.jet(i, 1);
            let f2 = self.jet(i, 2);
            let f3 = self.jet(i, 3);
            images.insert(self.var_index(i, 2), &f2 + &f1.scale(&(b2 * int(2))));
            let third = &(&f3 + &f2.scale(&(b2 * int(6)))) + &f1.scale(&(b3 * int(6)));
            images.insert(self.var_index(i, 3), third);
        }
        images
    }
}

fn jet_name(i: usize, r: usize) -> String {
    format!("f{i}{}", "'".repeat(r))
}

/// `R_ij` together with its indices.
#[derive(Debug, Clone)]
pub struct RaisingDerivation {
    pub i: usize,
    pub j: usize,
    pub derivation: Derivation,
}

/// A named invariant with the weights it is declared to carry.
#[derive(Debug, Clone)]
pub struct Generator {
    pub name: String,
    pub poly: Polynomial,
    pub reparam_weight: u64,
    pub gl_weight: Vec<i64>,
}

#[derive(Debug, Clone)]
pub struct GeneratorSet {
    pub n: usize,
    pub generators: Vec<Generator>,
}

impl GeneratorSet {
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn get(&self, name: &str) -> Result<&Generator> {
        self.generators
            .iter()
            .find(|g| g.name == name)
            .ok_or_else(|| Error::usage(format!("no generator named `{name}`")))
    }

    /// Polynomials of the named generators, in the order given.
    pub fn select(&self, names: &[&str]) -> Result<Vec<Polynomial>> {
        names
            .iter()
            .map(|n| self.get(n).map(|g| g.poly.clone()))
            .collect()
    }

    pub fn polys(&self) -> Vec<Polynomial> {
        self.generators.iter().map(|g| g.poly.clone()).collect()
    }
}

fn unit_sum(n: usize, idx: &[usize]) -> Vec<i64> {
    let mut w = vec![0; n];
    for &i in idx {
        w[i - 1] += 1;
    }
    w
}

/// `f_i′`, `w_ij`, `w_ij^k`, and for `n = 3` the Wronskian `W`.
///
/// For `n = 3` this gives 3 + 3 + 9 + 1 = 16 generators; for `n = 2` the five
/// `f₁′, f₂′, w₁₂, w₁₂¹, w₁₂²`.
pub fn build_generators(ring: &JetRing) -> GeneratorSet {
    let n = ring.n();
    let mut generators = Vec::new();
    for i in 1..=n {
        generators.push(Generator {
            name: format!("f{i}'"),
            poly: ring.jet(i, 1),
            reparam_weight: 1,
            gl_weight: unit_sum(n, &[i]),
        });
    }
    for i in 1..=n {
        for j in (i + 1)..=n {
            generators.push(Generator {
                name: format!("w{i}{j}"),
                poly: ring.wedge(i, j).expect("indices are in range"),
                reparam_weight: 3,
                gl_weight: unit_sum(n, &[i, j]),
            });
        }
    }
    for i in 1..=n {
        for j in (i + 1)..=n {
            for k in 1..=n {
                generators.push(Generator {
                    name: format!("w{i}{j}^{k}"),
                    poly: ring.wedge_k(i, j, k).expect("indices are in range"),
                    reparam_weight: 5,
                    gl_weight: unit_sum(n, &[i, j, k]),
                });
            }
        }
    }
    if n == 3 {
        generators.push(Generator {
            name: "W".to_string(),
            poly: ring.wronskian().expect("dimension is 3"),
            reparam_weight: 6,
            gl_weight: vec![1, 1, 1],
        });
    }
    GeneratorSet { n, generators }
}

/// Checks that both reparametrization derivations annihilate every generator
/// and that each generator is bihomogeneous of its declared weights.
pub fn verify_invariance(ring: &JetRing, gens: &GeneratorSet) -> Result<Vec<Check>> {
    let (d2, d3) = ring.reparam_derivations();
    let mut checks = Vec::new();
    for g in &gens.generators {
        for (label, d) in [("D_b2", &d2), ("D_b3", &d3)] {
            let image = d.apply(&g.poly)?;
            checks.push(Check::new(
                format!("{label}({}) = 0", g.name),
                "generators are invariant under reparametrization",
                Some("0".to_string()),
                image.to_string(),
                image.is_zero(),
            ));
        }
        let weights = g.poly.bihomogeneous_weights();
        let declared = (g.reparam_weight, g.gl_weight.clone());
        checks.push(Check::new(
            format!("weights({})", g.name),
            "generators are bihomogeneous",
            Some(format!("{declared:?}")),
            format!("{weights:?}"),
            weights.as_ref() == Some(&declared),
        ));
    }
    Ok(checks)
}

/// Checks that a random group element `(b₂, b₃)` fixes each generator under
/// exact substitution.
pub fn verify_group_element(ring: &JetRing, gens: &GeneratorSet, seed: u64) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let b2 = random_nonzero_rational(&mut rng);
    let b3 = random_nonzero_rational(&mut rng);
    let action = ring.group_action(&b2, &b3);
    let mut checks = Vec::new();
    for g in &gens.generators {
        let moved = g.poly.substitute(&action)?;
        let residual = &moved - &g.poly;
        checks.push(Check::new(
            format!(
                "phi({},{})·{} = {}",
                crate::poly::fmt_rational(&b2),
                crate::poly::fmt_rational(&b3),
                g.name,
                g.name
            ),
            "(f∘φ)‴ = f‴ + 6b₂f″ + 6b₃f′ fixes every generator",
            Some("0".to_string()),
            residual.to_string(),
            residual.is_zero(),
        ));
    }
    Ok(checks)
}

fn random_nonzero_rational(rng: &mut ChaCha8Rng) -> Rational {
    let mut num = 0i64;
    while num == 0 {
        num = rng.gen_range(-9..=9);
    }
    let den = rng.gen_range(1..=9);
    crate::poly::rat(num, den)
}

/// Expands `3w₁₂² − f₂′w₁₂¹ + f₁′w₁₂²` symbolically and at five random points.
pub fn verify_relation_r(ring: &JetRing, seed: u64) -> Result<Vec<Check>> {
    if ring.n() != 2 {
        return Err(Error::usage(
            "relation (R) lives in the dimension-2 jet ring",
        ));
    }
    let w = ring.wedge(1, 2)?;
    let w1 = ring.wedge_k(1, 2, 1)?;
    let w2 = ring.wedge_k(1, 2, 2)?;
    let lhs = w.pow(2).scale(&int(3));
    let rhs = &(&ring.jet(2, 1) * &w1) - &(&ring.jet(1, 1) * &w2);
    let residual = &lhs - &rhs;
    let anchor = "3(w₁₂)² = f₂′w₁₂¹ − f₁′w₁₂²";
    let mut checks = vec![Check::new(
        "relation R expands to zero",
        anchor,
        Some("0".to_string()),
        residual.to_string(),
        residual.is_zero(),
    )];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..5 {
        let point: Vec<Rational> = (0..ring.table().len())
            .map(|_| random_nonzero_rational(&mut rng))
            .collect();
        let l = lhs.evaluate_at(&point);
        let r = rhs.evaluate_at(&point);
        checks.push(Check::new(
            format!("relation R at random point {trial}"),
            anchor,
            Some(crate::poly::fmt_rational(&l)),
            crate::poly::fmt_rational(&r),
            l == r,
        ));
    }
    Ok(checks)
}

/// `f₁′w₂₃ − f₂′w₁₃ + f₃′w₁₂ = 0` in the dimension-3 jet ring.
pub fn verify_plucker(ring: &JetRing) -> Result<Vec<Check>> {
    if ring.n() != 3 {
        return Err(Error::usage("the Plücker identity needs dimension 3"));
    }
    let a = &ring.jet(1, 1) * &ring.wedge(2, 3)?;
    let b = &ring.jet(2, 1) * &ring.wedge(1, 3)?;
    let c = &ring.jet(3, 1) * &ring.wedge(1, 2)?;
    let residual = &(&a - &b) + &c;
    Ok(vec![Check::new(
        "Plücker identity expands to zero",
        "f₁′w₂₃ − f₂′w₁₃ + f₃′w₁₂ = 0",
        Some("0".to_string()),
        residual.to_string(),
        residual.is_zero(),
    )])
}

/// Resource limits for the brute-force oracles.
#[derive(Debug, Clone, Copy, Default)]
pub struct OracleOptions {
    /// Lift the default bound on the weight `m`.
    pub allow_large: bool,
}

fn check_bound(n: usize, m: u64, opts: OracleOptions) -> Result<()> {
    let bound = if n == 3 {
        MAX_ORDER_DIM3
    } else {
        MAX_ORDER_DIM2
    };
    if m > bound && !opts.allow_large {
        return Err(Error::Resource(format!(
            "weight {m} exceeds the default bound {bound} for dimension {n}"
        )));
    }
    Ok(())
}

/// Dimension of the space of weight-`m` polynomials killed by `D_b2` and
/// `D_b3`, by exact elimination on the monomial basis.
pub fn invariant_dimension_oracle(n: usize, m: u64, opts: OracleOptions) -> Result<u64> {
    let ring = JetRing::new(n)?;
    check_bound(n, m, opts)?;
    let (d2, d3) = ring.reparam_derivations();
    kernel_dimension(&ring, m, &[d2, d3])
}

/// Dimension of the weight-`m` polynomials killed by `D_b2`, `D_b3` and every
/// raising derivation `R_ij`: the number of irreducible `GL_n` constituents
/// of the invariant space, counted with multiplicity.
pub fn highest_weight_oracle(n: usize, m: u64, opts: OracleOptions) -> Result<u64> {
    let ring = JetRing::new(n)?;
    check_bound(n, m, opts)?;
    let (d2, d3) = ring.reparam_derivations();
    let mut derivs = vec![d2, d3];
    derivs.extend(ring.raising_derivations().into_iter().map(|r| r.derivation));
    kernel_dimension(&ring, m, &derivs)
}

/// Joint kernel dimension of `derivs` on the weight-`m` piece.
///
/// Every derivation used here maps a GL-weight space into a single GL-weight
/// space, so the domain splits into independent blocks by GL-weight.
fn kernel_dimension(ring: &JetRing, m: u64, derivs: &[Derivation]) -> Result<u64> {
    let table = ring.table();
    let mut blocks: BTreeMap<Vec<i64>, Vec<Monomial>> = BTreeMap::new();
    for mono in ring.weight_basis(m) {
        blocks.entry(mono.gl_weight(table)).or_default().push(mono);
    }
    let blocks: Vec<Vec<Monomial>> = blocks.into_values().collect();
    let dims = exec::map_ordered(blocks, |cols| block_kernel_dimension(table, &cols, derivs));
    dims.into_iter().sum()
}

fn block_kernel_dimension(
    table: &Arc<VariableTable>,
    cols: &[Monomial],
    derivs: &[Derivation],
) -> Result<u64> {
    let mut rows: HashMap<(usize, Monomial), linalg::SparseRow> = HashMap::new();
    for (c, mono) in cols.iter().enumerate() {
        let p = Polynomial::monomial(table, mono.clone(), Rational::one());
        for (k, d) in derivs.iter().enumerate() {
            for (tm, coeff) in d.apply(&p)?.terms() {
                rows.entry((k, tm.clone()))
                    .or_default()
                    .push((c, integral(coeff)));
            }
        }
    }
    let rank = linalg::rank(rows.into_values());
    Ok((cols.len() - rank) as u64)
}

fn integral(q: &Rational) -> BigInt {
    assert!(
        q.is_integer(),
        "derivation images have integer coefficients"
    );
    q.numer().clone()
}

/// Exponent tuple of a candidate highest-weight monomial
/// `(f₁′)^α (w₁₂)^β (w₁₂¹)^γ W^δ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HwExponents {
    pub alpha: u32,
    pub beta: u32,
    pub gamma: u32,
    pub delta: u32,
}

impl HwExponents {
    pub fn reparam_weight(&self) -> u64 {
        self.alpha as u64 + 3 * self.beta as u64 + 5 * self.gamma as u64 + 6 * self.delta as u64
    }

    /// `(α+β+2γ+δ; β+γ+δ; δ)`, truncated to `n` slots.
    pub fn expected_gl_weight(&self, n: usize) -> Vec<i64> {
        let (a, b, g, d) = (
            self.alpha as i64,
            self.beta as i64,
            self.gamma as i64,
            self.delta as i64,
        );
        let full = [a + b + 2 * g + d, b + g + d, d];
        full[..n].to_vec()
    }
}

/// All exponent tuples with weight at most `m_max` (no `W` when `n = 2`).
pub fn hw_exponents(n: usize, m_max: u64) -> Vec<HwExponents> {
    let mut out = Vec::new();
    let max_delta = if n == 3 { m_max / 6 } else { 0 };
    for delta in 0..=max_delta {
        for gamma in 0..=m_max / 5 {
            for beta in 0..=m_max / 3 {
                for alpha in 0..=m_max {
                    let e = HwExponents {
                        alpha: alpha as u32,
                        beta: beta as u32,
                        gamma: gamma as u32,
                        delta: delta as u32,
                    };
                    if e.reparam_weight() <= m_max {
                        out.push(e);
                    }
                }
            }
        }
    }
    out.sort_by_key(|e| (e.reparam_weight(), e.delta, e.gamma, e.beta, e.alpha));
    out
}

/// For every `(α, β, γ, δ)` of weight at most `m_max`, checks that the
/// monomial is killed by `D_b2`, `D_b3` and all `R_ij`, and that its
/// GL-weight is `(α+β+2γ+δ; β+γ+δ; δ)`.
pub fn verify_hw_monomials(n: usize, m_max: u64) -> Result<Vec<Check>> {
    let ring = JetRing::new(n)?;
    let (d2, d3) = ring.reparam_derivations();
    let mut derivs = vec![("D_b2".to_string(), d2), ("D_b3".to_string(), d3)];
    derivs.extend(
        ring.raising_derivations()
            .into_iter()
            .map(|r| (format!("R{}{}", r.i, r.j), r.derivation)),
    );
    let f1 = ring.jet(1, 1);
    let w = ring.wedge(1, 2)?;
    let w1 = ring.wedge_k(1, 2, 1)?;
    let wr = if n == 3 {
        Some(ring.wronskian()?)
    } else {
        None
    };

    let mut checks = Vec::new();
    for e in hw_exponents(n, m_max) {
        let mut mono = &(&f1.pow(e.alpha) * &w.pow(e.beta)) * &w1.pow(e.gamma);
        if let Some(wr) = &wr {
            mono = &mono * &wr.pow(e.delta);
        }
        let mut killed_by = Vec::new();
        let mut survivors = Vec::new();
        for (label, d) in &derivs {
            if d.apply(&mono)?.is_zero() {
                killed_by.push(label.as_str());
            } else {
                survivors.push(label.as_str());
            }
        }
        let expected = (e.reparam_weight(), e.expected_gl_weight(n));
        let computed = mono.bihomogeneous_weights();
        let pass = survivors.is_empty() && computed.as_ref() == Some(&expected);
        checks.push(Check::new(
            format!(
                "highest weight monomial (α,β,γ,δ)=({},{},{},{})",
                e.alpha, e.beta, e.gamma, e.delta
            ),
            "weight (α+β+2γ+δ; β+γ+δ; δ), killed by D_b2, D_b3, R_ij",
            Some(format!("weights {expected:?}, annihilated by all")),
            if survivors.is_empty() {
                format!("weights {computed:?}, annihilated by all")
            } else {
                format!(
                    "weights {computed:?}, not annihilated by {}",
                    survivors.join(",")
                )
            },
            pass,
        ));
    }
    Ok(checks)
}

/// Rank of the Jacobian matrix `∂g/∂f_i^{(r)}` at a random integer point with
/// coordinates in `[1, 97]`; the maximum over five points.
///
/// Points at which some polynomial vanishes are rejected and redrawn.
pub fn jacobian_rank(ring: &JetRing, polys: &[Polynomial], seed: u64) -> Result<u64> {
    let table = ring.table();
    for p in polys {
        if !Arc::ptr_eq(p.table(), table) && **p.table() != **table {
            return Err(Error::TableMismatch);
        }
    }
    let partials: Vec<Vec<Polynomial>> = polys
        .iter()
        .map(|p| (0..table.len()).map(|v| p.partial(v)).collect())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = 0u64;
    for _ in 0..5 {
        let point = loop {
            let pt: Vec<Rational> = (0..table.len())
                .map(|_| int(rng.gen_range(1..=97)))
                .collect();
            if polys.iter().all(|p| !p.evaluate_at(&pt).is_zero()) {
                break pt;
            }
        };
        let matrix: Vec<Vec<Rational>> = partials
            .iter()
            .map(|row| row.iter().map(|d| d.evaluate_at(&point)).collect())
            .collect();
        best = best.max(linalg::rank_rational(&matrix) as u64);
    }
    Ok(best)
}
