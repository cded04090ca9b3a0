use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::table::VariableTable;
use super::Rational;
use crate::error::{Error, Result};

/// Exponent vector, one entry per variable of the table.
///
/// Ordered graded-lexicographically: higher total degree first compares
/// greater, ties are broken by the exponent of the earliest variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, var: usize) -> Self {
        let mut e = vec![0; nvars];
        e[var] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn reparam_weight(&self, table: &VariableTable) -> u64 {
        self.0
            .iter()
            .enumerate()
            .map(|(v, &e)| e as u64 * table.reparam_weight(v) as u64)
            .sum()
    }

    pub fn gl_weight(&self, table: &VariableTable) -> Vec<i64> {
        let mut w = vec![0i64; table.gl_rank()];
        for (v, &e) in self.0.iter().enumerate() {
            if e > 0 {
                for (slot, g) in w.iter_mut().zip(table.gl_weight(v)) {
                    *slot += e as i64 * g;
                }
            }
        }
        w
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Which grading to select a homogeneous component for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Grading {
    Reparam(u64),
    Gl(Vec<i64>),
}

/// Sparse polynomial with exact rational coefficients.
///
/// Zero coefficients are never stored. The arithmetic operators panic when the
/// operands were built over different tables; the `checked_*` methods report
/// that as [`Error::TableMismatch`] instead.
#[derive(Clone)]
pub struct Polynomial {
    table: Arc<VariableTable>,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.table, &other.table) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

fn same_table(a: &Arc<VariableTable>, b: &Arc<VariableTable>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Polynomial {
    pub fn zero(table: &Arc<VariableTable>) -> Self {
        Polynomial {
            table: Arc::clone(table),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(table: &Arc<VariableTable>, c: Rational) -> Self {
        let mut p = Self::zero(table);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(table.len()), c);
        }
        p
    }

    pub fn one(table: &Arc<VariableTable>) -> Self {
        Self::constant(table, Rational::one())
    }

    pub fn var(table: &Arc<VariableTable>, name: &str) -> Result<Self> {
        Ok(Self::var_index(table, table.index(name)?))
    }

    pub fn var_index(table: &Arc<VariableTable>, var: usize) -> Self {
        Self::monomial(table, Monomial::var(table.len(), var), Rational::one())
    }

    pub fn monomial(table: &Arc<VariableTable>, mono: Monomial, c: Rational) -> Self {
        assert_eq!(
            mono.0.len(),
            table.len(),
            "monomial length does not match table"
        );
        let mut p = Self::zero(table);
        if !c.is_zero() {
            p.terms.insert(mono, c);
        }
        p
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs, merging repeats.
    pub fn from_terms(
        table: &Arc<VariableTable>,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Self {
        let mut p = Self::zero(table);
        for (m, c) in terms {
            assert_eq!(
                m.0.len(),
                table.len(),
                "monomial length does not match table"
            );
            p.add_term(m, c);
        }
        p
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        &self.table
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &Monomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_table(&self, other: &Polynomial) -> Result<()> {
        if same_table(&self.table, &other.table) {
            Ok(())
        } else {
            Err(Error::TableMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_table(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_table(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_table(other)?;
        let mut out = Polynomial::zero(&self.table);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.table);
        }
        Polynomial {
            table: Arc::clone(&self.table),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.table);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Sum of the terms whose weight in the chosen grading equals the value.
    pub fn graded_component(&self, grading: &Grading) -> Polynomial {
        let table = &self.table;
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| match grading {
                Grading::Reparam(w) => m.reparam_weight(table) == *w,
                Grading::Gl(w) => m.gl_weight(table) == *w,
            })
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Polynomial {
            table: Arc::clone(table),
            terms,
        }
    }

    /// Distinct reparametrization weights occurring in the polynomial.
    pub fn reparam_weights(&self) -> Vec<u64> {
        let mut ws: Vec<u64> = self
            .terms
            .keys()
            .map(|m| m.reparam_weight(&self.table))
            .collect();
        ws.sort_unstable();
        ws.dedup();
        ws
    }

    /// `Some((reparam weight, gl weight))` when every term carries the same
    /// pair of weights; `None` for the zero polynomial or mixed weights.
    pub fn bihomogeneous_weights(&self) -> Option<(u64, Vec<i64>)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let w = (
            first.reparam_weight(&self.table),
            first.gl_weight(&self.table),
        );
        for m in it {
            if m.reparam_weight(&self.table) != w.0 || m.gl_weight(&self.table) != w.1 {
                return None;
            }
        }
        Some(w)
    }

    /// Substitutes the named values; every variable occurring in `self`
    /// must be assigned.
    pub fn evaluate(&self, point: &HashMap<String, Rational>) -> Result<Rational> {
        let mut values = Vec::with_capacity(self.table.len());
        let used = self.used_variables();
        for (v, &is_used) in used.iter().enumerate() {
            let name = self.table.name(v);
            match point.get(name) {
                Some(x) => values.push(x.clone()),
                None if is_used => return Err(Error::MissingAssignment(name.to_string())),
                None => values.push(Rational::zero()),
            }
        }
        Ok(self.evaluate_at(&values))
    }

    /// Substitutes `values[v]` for variable `v`. Panics if the slice is short.
    pub fn evaluate_at(&self, values: &[Rational]) -> Rational {
        assert!(values.len() >= self.table.len(), "too few values");
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    term *= num_traits::pow(values[v].clone(), e as usize);
                }
            }
            total += term;
        }
        total
    }

    fn used_variables(&self) -> Vec<bool> {
        let mut used = vec![false; self.table.len()];
        for m in self.terms.keys() {
            for (v, &e) in m.0.iter().enumerate() {
                used[v] |= e > 0;
            }
        }
        used
    }

    /// Partial derivative with respect to variable index `var`.
    pub fn partial(&self, var: usize) -> Polynomial {
        let mut out = Polynomial::zero(&self.table);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e > 0 {
                let mut lowered = m.clone();
                lowered.0[var] -= 1;
                out.add_term(lowered, c * Rational::from_integer(e.into()));
            }
        }
        out
    }

    /// Replaces each listed variable by a polynomial; unlisted variables are
    /// left as they are.
    pub fn substitute(&self, images: &BTreeMap<usize, Polynomial>) -> Result<Polynomial> {
        for img in images.values() {
            self.check_table(img)?;
        }
        let mut out = Polynomial::zero(&self.table);
        let mut power_cache: HashMap<(usize, u32), Polynomial> = HashMap::new();
        for (m, c) in &self.terms {
            let mut kept = m.clone();
            let mut term = Polynomial::one(&self.table);
            for (&v, img) in images {
                let e = m.0[v];
                if e > 0 {
                    kept.0[v] = 0;
                    let pw = power_cache
                        .entry((v, e))
                        .or_insert_with(|| img.pow(e))
                        .clone();
                    term = &term * &pw;
                }
            }
            let lead = Polynomial::monomial(&self.table, kept, c.clone());
            out = &out + &(&lead * &term);
        }
        Ok(out)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("variable table mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("variable table mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("variable table mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            table: Arc::clone(&self.table),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl fmt::Display for Polynomial {
    /// Terms from the largest monomial down, e.g. `2*x^2*y - 1/3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let factors: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(v, &e)| {
                        let name = self.table.name(v);
                        if e == 1 {
                            name.to_string()
                        } else {
                            format!("{name}^{e}")
                        }
                    })
                    .collect();
            let coeff = super::fmt_rational(&mag);
            if factors.is_empty() {
                write!(f, "{coeff}")?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{coeff}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}
