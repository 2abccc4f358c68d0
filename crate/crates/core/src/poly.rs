//! Sparse multivariate polynomials over the integers with a positive weight
//! attached to every variable. Just enough arithmetic for expanding syzygies
//! of binomial ideals and for substituting monomial curves: addition,
//! multiplication, isobaric checks and one-variable power substitution.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

/// Variable names and weights shared by the terms of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VarSet {
    pub names: Vec<String>,
    pub weights: Vec<i64>,
}

impl VarSet {
    pub fn new(vars: &[(&str, i64)]) -> Self {
        VarSet {
            names: vars.iter().map(|(n, _)| n.to_string()).collect(),
            weights: vars.iter().map(|&(_, w)| w).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }
}

/// A sparse polynomial: exponent vector -> nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightedPolynomial {
    pub vars: VarSet,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl WeightedPolynomial {
    pub fn zero(vars: &VarSet) -> Self {
        WeightedPolynomial {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// A single term `coeff * X^exponents`.
    pub fn monomial(vars: &VarSet, exponents: &[u32], coeff: i64) -> Self {
        assert_eq!(exponents.len(), vars.len());
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exponents.to_vec(), coeff);
        }
        WeightedPolynomial {
            vars: vars.clone(),
            terms,
        }
    }

    /// `X_i^k`.
    pub fn var_power(vars: &VarSet, i: usize, k: u32) -> Self {
        let mut e = vec![0u32; vars.len()];
        e[i] = k;
        Self::monomial(vars, &e, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], i64)> {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn insert(&mut self, exps: Vec<u32>, coeff: i64) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn weight_of(&self, exponents: &[u32]) -> i64 {
        exponents
            .iter()
            .zip(&self.vars.weights)
            .map(|(&e, &w)| e as i64 * w)
            .sum()
    }

    /// The common weight of all terms, if the polynomial is isobaric;
    /// `None` for the zero polynomial or mixed weights.
    pub fn isobaric_weight(&self) -> Option<i64> {
        let mut it = self.terms.keys();
        let first = self.weight_of(it.next()?);
        for e in it {
            if self.weight_of(e) != first {
                return None;
            }
        }
        Some(first)
    }

    /// Substitutes `X_i <- t^{w_i}` and returns the resulting univariate
    /// polynomial as a map from t-exponent to coefficient. The polynomial
    /// vanishes on the monomial curve exactly when the map is empty.
    pub fn substitute_weights(&self) -> BTreeMap<i64, i64> {
        let mut out: BTreeMap<i64, i64> = BTreeMap::new();
        for (e, &c) in &self.terms {
            let w = self.weight_of(e);
            let entry = out.entry(w).or_insert(0);
            *entry += c;
            if *entry == 0 {
                out.remove(&w);
            }
        }
        out
    }
}

impl Add for &WeightedPolynomial {
    type Output = WeightedPolynomial;

    fn add(self, rhs: &WeightedPolynomial) -> WeightedPolynomial {
        assert_eq!(self.vars, rhs.vars, "mixed variable sets");
        let mut out = self.clone();
        for (e, &c) in &rhs.terms {
            out.insert(e.clone(), c);
        }
        out
    }
}

impl Sub for &WeightedPolynomial {
    type Output = WeightedPolynomial;

    fn sub(self, rhs: &WeightedPolynomial) -> WeightedPolynomial {
        assert_eq!(self.vars, rhs.vars, "mixed variable sets");
        let mut out = self.clone();
        for (e, &c) in &rhs.terms {
            out.insert(e.clone(), -c);
        }
        out
    }
}

impl Neg for &WeightedPolynomial {
    type Output = WeightedPolynomial;

    fn neg(self) -> WeightedPolynomial {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -*c;
        }
        out
    }
}

impl Mul for &WeightedPolynomial {
    type Output = WeightedPolynomial;

    fn mul(self, rhs: &WeightedPolynomial) -> WeightedPolynomial {
        assert_eq!(self.vars, rhs.vars, "mixed variable sets");
        let mut out = WeightedPolynomial::zero(&self.vars);
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(&x, &y)| x + y).collect();
                out.insert(e, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for WeightedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // order terms by the reversed exponent vector, descending, so the
        // highest-index variables lead (matches the usual way these
        // binomials are written)
        let mut ordered: Vec<(&Vec<u32>, i64)> =
            self.terms.iter().map(|(e, &c)| (e, c)).collect();
        ordered.sort_by(|a, b| {
            let ra: Vec<u32> = a.0.iter().rev().copied().collect();
            let rb: Vec<u32> = b.0.iter().rev().copied().collect();
            rb.cmp(&ra)
        });
        let mut first = true;
        for (e, c) in ordered {
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            if !first {
                write!(f, " {sign} ")?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            first = false;
            let mut parts = Vec::new();
            if c.abs() != 1 || e.iter().all(|&x| x == 0) {
                parts.push(c.abs().to_string());
            }
            for (i, &exp) in e.iter().enumerate() {
                if exp == 1 {
                    parts.push(self.vars.names[i].clone());
                } else if exp > 1 {
                    parts.push(format!("{}^{}", self.vars.names[i], exp));
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}
