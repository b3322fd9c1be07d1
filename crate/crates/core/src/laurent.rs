//! Multivariate Laurent polynomials with arbitrary-precision integer
//! coefficients, stored as a sorted map from exponent vectors to nonzero
//! coefficients. The map order (lexicographic on exponents) is the
//! canonical term order, so equal polynomials compare and hash equal.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Exponents = Vec<i32>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPolynomial {
    nvars: usize,
    terms: BTreeMap<Exponents, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero(nvars: usize) -> Self {
        LaurentPolynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], BigInt::one())
    }

    /// The indeterminate `x_{i+1}`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, BigInt::one())
    }

    pub fn monomial(exponents: Exponents, coeff: BigInt) -> Self {
        let nvars = exponents.len();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exponents, coeff);
        }
        LaurentPolynomial { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    fn add_term(&mut self, e: Exponents, c: BigInt) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplication by a monomial `coeff · x^shift`.
    pub fn shift(&self, shift: &[i32], coeff: &BigInt) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c * coeff))
            .filter(|(_, c): &(Exponents, BigInt)| !c.is_zero())
            .collect();
        LaurentPolynomial { nvars: self.nvars, terms }
    }

    /// Componentwise minimum exponent over all terms (`None` for zero).
    pub fn min_exponents(&self) -> Option<Exponents> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, e| acc.iter().zip(e).map(|(a, b)| *a.min(b)).collect()))
    }

    pub fn max_exponents(&self) -> Option<Exponents> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, e| acc.iter().zip(e).map(|(a, b)| *a.max(b)).collect()))
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder. Lex-leading-term division, with the quotient's exponents
    /// confined to the box allowed by the Newton polytopes of the operands.
    pub fn exact_div(&self, divisor: &LaurentPolynomial) -> Option<Self> {
        let (lead_e, lead_c) = divisor.terms.iter().next_back()?;
        if self.is_zero() {
            return Some(self.clone());
        }
        let lo: Vec<i32> = self
            .min_exponents()?
            .iter()
            .zip(divisor.max_exponents()?)
            .map(|(a, b)| a - b)
            .collect();
        let hi: Vec<i32> = self
            .max_exponents()?
            .iter()
            .zip(divisor.min_exponents()?)
            .map(|(a, b)| a - b)
            .collect();

        let mut rem = self.terms.clone();
        let mut quotient = BTreeMap::new();
        while let Some((e, c)) = rem.iter().next_back() {
            let qe: Exponents = e.iter().zip(lead_e).map(|(a, b)| a - b).collect();
            if qe.iter().zip(lo.iter().zip(&hi)).any(|(x, (l, h))| x < l || x > h) {
                return None;
            }
            let (qc, r) = c.div_rem(lead_c);
            if !r.is_zero() {
                return None;
            }
            for (de, dc) in &divisor.terms {
                let te: Exponents = de.iter().zip(&qe).map(|(a, b)| a + b).collect();
                let prod = dc * &qc;
                use std::collections::btree_map::Entry;
                match rem.entry(te) {
                    Entry::Vacant(v) => {
                        v.insert(-prod);
                    }
                    Entry::Occupied(mut o) => {
                        *o.get_mut() -= prod;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                }
            }
            quotient.insert(qe, qc);
        }
        Some(LaurentPolynomial { nvars: self.nvars, terms: quotient })
    }

    /// Canonical text form: terms in increasing exponent order, factors
    /// `x<i>^<e>` joined by `*`, e.g. `x1^-1 + x1^-1*x2^1`.
    pub fn to_canonical_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p != 0)
                .map(|(i, p)| format!("x{}^{p}", i + 1))
                .collect();
            let mag = c.abs();
            let body = match (factors.is_empty(), mag.is_one()) {
                (true, _) => mag.to_string(),
                (false, true) => factors.join("*"),
                (false, false) => format!("{mag}*{}", factors.join("*")),
            };
            match (k, c.is_negative()) {
                (0, false) => out.push_str(&body),
                (0, true) => {
                    out.push('-');
                    out.push_str(&body);
                }
                (_, false) => {
                    out.push_str(" + ");
                    out.push_str(&body);
                }
                (_, true) => {
                    out.push_str(" - ");
                    out.push_str(&body);
                }
            }
        }
        out
    }

    /// Parses sums of terms like `3*x1^-1*x2`, `x2^2` or `-1`. Accepts the
    /// canonical form and the obvious abbreviations.
    pub fn parse(nvars: usize, s: &str) -> Result<Self> {
        let bad = |msg: String| Error::InvalidPositions(format!("cannot parse Laurent polynomial: {msg}"));
        let mut poly = Self::zero(nvars);
        let normalized = s.replace(' ', "").replace("^-", "^~").replace('-', "+-").replace("^~", "^-");
        for term in normalized.split('+').filter(|t| !t.is_empty()) {
            let (sign, body) = match term.strip_prefix('-') {
                Some(rest) => (-1, rest),
                None => (1, term),
            };
            let mut coeff = BigInt::from(sign);
            let mut exps = vec![0i32; nvars];
            for factor in body.split('*') {
                if let Some(rest) = factor.strip_prefix('x') {
                    let (idx, pow) = match rest.split_once('^') {
                        Some((i, p)) => (i, p.parse::<i32>().map_err(|e| bad(e.to_string()))?),
                        None => (rest, 1),
                    };
                    let idx: usize = idx.parse().map_err(|_| bad(format!("variable {factor:?}")))?;
                    if idx == 0 || idx > nvars {
                        return Err(bad(format!("variable index {idx} out of range")));
                    }
                    exps[idx - 1] += pow;
                } else {
                    let v: BigInt = factor.parse().map_err(|_| bad(format!("factor {factor:?}")))?;
                    coeff *= v;
                }
            }
            poly.add_term(exps, coeff);
        }
        Ok(poly)
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl<'a> Add<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: &'a LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: &'a LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: &'a LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}
