//! Multivariate polynomials over the Gaussian rationals.
//!
//! A [`Ring`] is an ordered list of indeterminate names. The order is fixed
//! at construction: names that belong to the registry come first, in registry
//! order, followed by any remaining names in the order given. Terms are kept
//! sorted in descending graded lexicographic order and zero coefficients are
//! never stored, so the representation is canonical.

use super::gaussrat::GaussRat;
use num_complex::Complex64;
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// Fixed registry of indeterminate names, defining the global variable order.
/// Fresh unknowns (gauge entries, deformation coefficients and the like) sort
/// after every registry name.
pub const REGISTRY: &[&str] = &[
    "z", "t", "q", "a", "theta", "theta0", "thetainf", "d", "eps1", "eps2", "alpha", "beta", "a1",
    "a2", "b1", "b2", "e", "c1", "c2", "l1", "l2", "l3", "l4", "x1", "x2", "x3", "lambda", "qp",
    "ap", "qpp", "Q", "A", "rho",
];

fn registry_rank(name: &str) -> Option<usize> {
    REGISTRY.iter().position(|n| *n == name)
}

#[derive(Debug)]
struct RingInner {
    vars: Vec<String>,
    index: HashMap<String, usize>,
}

/// A polynomial ring context (shared, cheap to clone).
#[derive(Clone)]
pub struct Ring(Arc<RingInner>);

impl Ring {
    /// Create a ring with the given indeterminates. Registry names are
    /// reordered into registry order; non-registry names keep their relative
    /// order and come last. Duplicate names panic.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Ring {
        let mut reg: Vec<(usize, String)> = Vec::new();
        let mut rest: Vec<String> = Vec::new();
        for n in names {
            let n = n.as_ref().to_string();
            match registry_rank(&n) {
                Some(r) => reg.push((r, n)),
                None => rest.push(n),
            }
        }
        reg.sort_by_key(|(r, _)| *r);
        let mut vars: Vec<String> = reg.into_iter().map(|(_, n)| n).collect();
        vars.extend(rest);
        let mut index = HashMap::new();
        for (i, v) in vars.iter().enumerate() {
            assert!(
                index.insert(v.clone(), i).is_none(),
                "duplicate indeterminate {v}"
            );
        }
        Ring(Arc::new(RingInner { vars, index }))
    }

    /// Extend this ring with additional names (used for solver unknowns).
    pub fn extend<S: AsRef<str>>(&self, names: &[S]) -> Ring {
        let mut all: Vec<String> = self.0.vars.clone();
        for n in names {
            all.push(n.as_ref().to_string());
        }
        Ring::new(&all)
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn num_vars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.index.get(name).copied()
    }

    pub fn same(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.vars == other.0.vars
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring[{}]", self.0.vars.join(","))
    }
}

pub type Mono = SmallVec<[u16; 12]>;

/// Descending graded lexicographic comparison.
fn mono_cmp(a: &Mono, b: &Mono) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => a.cmp(b),
        o => o,
    }
}

/// A multivariate polynomial with Gaussian-rational coefficients.
#[derive(Clone)]
pub struct MultiPoly {
    ring: Ring,
    /// Sorted descending by `mono_cmp`; no zero coefficients.
    terms: Vec<(Mono, GaussRat)>,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same(&other.ring) && self.terms == other.terms
    }
}

impl MultiPoly {
    fn from_terms(ring: Ring, mut terms: Vec<(Mono, GaussRat)>) -> MultiPoly {
        terms.sort_by(|x, y| mono_cmp(&y.0, &x.0));
        let mut merged: Vec<(Mono, GaussRat)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some(last) = merged.last_mut() {
                if last.0 == m {
                    last.1 = &last.1 + &c;
                    continue;
                }
            }
            merged.push((m, c));
        }
        merged.retain(|(_, c)| !c.is_zero());
        MultiPoly {
            ring,
            terms: merged,
        }
    }

    /// Build from terms assumed distinct; they are sorted and zeros dropped.
    pub(crate) fn from_sorted_unchecked(ring: &Ring, terms: Vec<(Mono, GaussRat)>) -> MultiPoly {
        MultiPoly::from_terms(ring.clone(), terms)
    }

    pub fn zero(ring: &Ring) -> MultiPoly {
        MultiPoly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring, c: GaussRat) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(ring);
        }
        let m: Mono = SmallVec::from_elem(0u16, ring.num_vars());
        MultiPoly {
            ring: ring.clone(),
            terms: vec![(m, c)],
        }
    }

    pub fn one(ring: &Ring) -> MultiPoly {
        MultiPoly::constant(ring, GaussRat::one())
    }

    pub fn int(ring: &Ring, n: i64) -> MultiPoly {
        MultiPoly::constant(ring, GaussRat::from_int(n))
    }

    /// The indeterminate `name`. Panics if absent from the ring.
    pub fn var(ring: &Ring, name: &str) -> MultiPoly {
        let i = ring
            .var_index(name)
            .unwrap_or_else(|| panic!("indeterminate {name} not in {ring:?}"));
        let mut m: Mono = SmallVec::from_elem(0u16, ring.num_vars());
        m[i] = 1;
        MultiPoly {
            ring: ring.clone(),
            terms: vec![(m, GaussRat::one())],
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.iter().all(|&e| e == 0))
    }

    /// The constant value, if this polynomial is constant.
    pub fn as_constant(&self) -> Option<GaussRat> {
        if self.terms.is_empty() {
            Some(GaussRat::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &GaussRat)> {
        self.terms.iter().map(|(m, c)| (m, c))
    }

    /// Leading coefficient under graded lex.
    pub fn leading_coeff(&self) -> GaussRat {
        self.terms
            .first()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(GaussRat::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .first()
            .map(|(m, _)| m.iter().map(|&e| e as u32).sum())
            .unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.iter().map(|(m, _)| m[var]).max().unwrap_or(0)
    }

    pub fn degree_in_name(&self, name: &str) -> u16 {
        match self.ring.var_index(name) {
            Some(i) => self.degree_in(i),
            None => 0,
        }
    }

    fn assert_ring(&self, other: &MultiPoly) {
        assert!(
            self.ring.same(&other.ring),
            "ring mismatch: {:?} vs {:?}",
            self.ring,
            other.ring
        );
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        self.assert_ring(other);
        // Merge two sorted term lists.
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match mono_cmp(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].1 + &other.terms[j].1;
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        MultiPoly {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        self.assert_ring(other);
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero(&self.ring);
        }
        let mut acc: HashMap<Mono, GaussRat> = HashMap::with_capacity(self.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let mut m = ma.clone();
                for (k, e) in mb.iter().enumerate() {
                    m[k] += e;
                }
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v = &*v + &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        MultiPoly::from_terms(self.ring.clone(), acc.into_iter().collect())
    }

    pub fn mul_scalar(&self, c: &GaussRat) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.ring);
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(&self.ring);
        let mut base = self.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Partial derivative with respect to variable index `var`.
    pub fn derivative(&self, var: usize) -> MultiPoly {
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m[var];
            if e > 0 {
                let mut m2 = m.clone();
                m2[var] = e - 1;
                terms.push((m2, c * &GaussRat::from_int(e as i64)));
            }
        }
        MultiPoly::from_terms(self.ring.clone(), terms)
    }

    /// Multiply by `var^k`.
    pub fn mul_var_pow(&self, var: usize, k: u16) -> MultiPoly {
        MultiPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut m2 = m.clone();
                    m2[var] += k;
                    (m2, c.clone())
                })
                .collect(),
        }
    }

    /// View as univariate in `var`: coefficients by degree, constant term first.
    pub fn coeffs_in(&self, var: usize) -> Vec<MultiPoly> {
        let d = self.degree_in(var) as usize;
        let mut out = vec![Vec::new(); d + 1];
        for (m, c) in &self.terms {
            let e = m[var] as usize;
            let mut m2 = m.clone();
            m2[var] = 0;
            out[e].push((m2, c.clone()));
        }
        out.into_iter()
            .map(|ts| MultiPoly::from_terms(self.ring.clone(), ts))
            .collect()
    }

    /// Rebuild from univariate-in-`var` coefficients.
    pub fn from_coeffs_in(ring: &Ring, var: usize, coeffs: &[MultiPoly]) -> MultiPoly {
        let mut acc = MultiPoly::zero(ring);
        for (k, c) in coeffs.iter().enumerate() {
            acc = acc.add(&c.mul_var_pow(var, k as u16));
        }
        acc
    }

    /// Exact division: returns `self / div` if the division is exact.
    pub fn exact_div(&self, div: &MultiPoly) -> Option<MultiPoly> {
        self.assert_ring(div);
        assert!(!div.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(MultiPoly::zero(&self.ring));
        }
        if let Some(c) = div.as_constant() {
            return Some(self.mul_scalar(&c.inv()));
        }
        let (dm, dc) = (&div.terms[0].0, &div.terms[0].1);
        let dci = dc.inv();
        let mut rem = self.clone();
        let mut quo: Vec<(Mono, GaussRat)> = Vec::new();
        while !rem.is_zero() {
            let (lm, lc) = (&rem.terms[0].0, &rem.terms[0].1);
            // Leading monomial of divisor must divide leading monomial of rem.
            let mut qm: Mono = SmallVec::with_capacity(lm.len());
            for (e, f) in lm.iter().zip(dm.iter()) {
                if e < f {
                    return None;
                }
                qm.push(e - f);
            }
            let qc = lc * &dci;
            let t = MultiPoly {
                ring: self.ring.clone(),
                terms: vec![(qm.clone(), qc.clone())],
            };
            rem = rem.sub(&t.mul(div));
            quo.push((qm, qc));
        }
        Some(MultiPoly::from_terms(self.ring.clone(), quo))
    }

    /// Monomial content: the minimal exponent of each variable.
    fn mono_content(&self) -> Mono {
        let n = self.ring.num_vars();
        let mut min: Mono = SmallVec::from_elem(u16::MAX, n);
        for (m, _) in &self.terms {
            for k in 0..n {
                if m[k] < min[k] {
                    min[k] = m[k];
                }
            }
        }
        min
    }

    fn div_mono(&self, m: &Mono) -> MultiPoly {
        MultiPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(mm, c)| {
                    let mut m2 = mm.clone();
                    for k in 0..m2.len() {
                        m2[k] -= m[k];
                    }
                    (m2, c.clone())
                })
                .collect(),
        }
    }

    /// Make the graded-lex leading coefficient 1.
    pub fn monic(&self) -> MultiPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.mul_scalar(&self.leading_coeff().inv())
    }

    /// Greatest common divisor, normalized monic. `gcd(0,0) = 0`.
    pub fn gcd(&self, other: &MultiPoly) -> MultiPoly {
        self.assert_ring(other);
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        // Split off monomial content.
        let ca = self.mono_content();
        let cb = other.mono_content();
        let mut cg: Mono = SmallVec::with_capacity(ca.len());
        for (x, y) in ca.iter().zip(cb.iter()) {
            cg.push(*x.min(y));
        }
        let a = self.div_mono(&ca);
        let b = other.div_mono(&cb);
        let g = gcd_inner(&a, &b);
        let mono = MultiPoly {
            ring: self.ring.clone(),
            terms: vec![(cg, GaussRat::one())],
        };
        g.mul(&mono).monic()
    }

    /// Map into another ring by variable name. Fails if a variable with a
    /// nonzero exponent is missing from the target.
    pub fn map_ring(&self, target: &Ring) -> Option<MultiPoly> {
        let n = self.ring.num_vars();
        let mut idx = Vec::with_capacity(n);
        for v in self.ring.vars() {
            idx.push(target.var_index(v));
        }
        let tn = target.num_vars();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut m2: Mono = SmallVec::from_elem(0u16, tn);
            for k in 0..n {
                if m[k] > 0 {
                    match idx[k] {
                        Some(j) => m2[j] = m[k],
                        None => return None,
                    }
                }
            }
            terms.push((m2, c.clone()));
        }
        Some(MultiPoly::from_terms(target.clone(), terms))
    }

    /// Evaluate numerically; `vals` must cover every variable that occurs.
    pub fn eval_c64(&self, vals: &HashMap<String, Complex64>) -> Complex64 {
        let n = self.ring.num_vars();
        let mut v = vec![Complex64::new(0.0, 0.0); n];
        let mut have = vec![false; n];
        for (name, z) in vals {
            if let Some(i) = self.ring.var_index(name) {
                v[i] = *z;
                have[i] = true;
            }
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut t = c.to_c64();
            for k in 0..n {
                if m[k] > 0 {
                    assert!(have[k], "missing value for {}", self.ring.vars()[k]);
                    t *= v[k].powi(m[k] as i32);
                }
            }
            acc += t;
        }
        acc
    }
}

/// Lazy pseudo-remainder of `f` by `g` as univariate in `var`: repeatedly
/// cancels the leading term after scaling by `lc(g)`, so the result equals
/// `lc(g)^k * f mod g` for some `k >= 0`. Sufficient for a primitive PRS.
fn prem(f: &MultiPoly, g: &MultiPoly, var: usize) -> MultiPoly {
    let dg = g.degree_in(var);
    let lg = g.coeffs_in(var)[dg as usize].clone();
    let mut r = f.clone();
    loop {
        if r.is_zero() {
            return r;
        }
        let dr = r.degree_in(var);
        if dr < dg {
            return r;
        }
        let lr = r.coeffs_in(var)[dr as usize].clone();
        let t = lr.mul_var_pow(var, dr - dg).mul(g);
        r = r.mul(&lg).sub(&t);
        debug_assert!(r.is_zero() || r.degree_in(var) < dr);
    }
}

/// Content of `f` viewed as univariate in `var`: gcd of its coefficients.
fn content_in(f: &MultiPoly, var: usize) -> MultiPoly {
    let coeffs = f.coeffs_in(var);
    let mut g = MultiPoly::zero(f.ring());
    for c in &coeffs {
        if !c.is_zero() {
            g = g.gcd(c);
            if g.is_constant() {
                return MultiPoly::one(f.ring());
            }
        }
    }
    g
}

/// GCD after monomial-content removal; both nonzero.
fn gcd_inner(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one(a.ring());
    }
    if a == b {
        return a.clone();
    }
    // Choose a main variable present in both, minimizing the larger degree.
    let n = a.ring().num_vars();
    let mut var = None;
    let mut best = u32::MAX;
    for k in 0..n {
        let da = a.degree_in(k);
        let db = b.degree_in(k);
        if da > 0 && db > 0 {
            let score = da.max(db) as u32;
            if score < best {
                best = score;
                var = Some(k);
            }
        }
    }
    let var = match var {
        Some(v) => v,
        // No common variable: gcd of contents is constant.
        None => return MultiPoly::one(a.ring()),
    };
    let ca = content_in(a, var);
    let cb = content_in(b, var);
    let pa = a.exact_div(&ca).expect("content divides");
    let pb = b.exact_div(&cb).expect("content divides");
    let cg = ca.gcd(&cb);

    // Primitive PRS on the primitive parts.
    let (mut f, mut g) = if pa.degree_in(var) >= pb.degree_in(var) {
        (pa, pb)
    } else {
        (pb, pa)
    };
    loop {
        let r = prem(&f, &g, var);
        if r.is_zero() {
            break;
        }
        if r.degree_in(var) == 0 {
            // Coprime as polynomials in var.
            return cg.monic();
        }
        let rc = content_in(&r, var);
        let rp = r.exact_div(&rc).expect("content divides");
        f = g;
        g = rp;
    }
    // g is the gcd of the primitive parts, up to content introduced by
    // pseudo-division; strip it.
    let gc = content_in(&g, var);
    let gp = g.exact_div(&gc).expect("content divides");
    cg.mul(&gp).monic()
}

impl fmt::Display for MultiPoly {
    /// Canonical text form: terms in descending graded-lex order, e.g.
    /// `q^2*t - 2*a + 1`, coefficients in Gaussian-rational canonical form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in m.iter().enumerate() {
                if e == 1 {
                    factors.push(self.ring.vars()[i].clone());
                } else if e > 1 {
                    factors.push(format!("{}^{}", self.ring.vars()[i], e));
                }
            }
            let coeff_str = c.to_string();
            let is_neg_simple = coeff_str.starts_with('-')
                && !coeff_str[1..].contains('+')
                && !coeff_str[1..].contains('-');
            let needs_parens = (coeff_str.contains('+') || (coeff_str.rfind('-') > Some(0)))
                && !factors.is_empty();
            let (sign, mag) = if needs_parens {
                ("+", format!("({coeff_str})"))
            } else if is_neg_simple {
                ("-", coeff_str[1..].to_string())
            } else {
                ("+", coeff_str.clone())
            };
            if k == 0 {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(if sign == "-" { " - " } else { " + " });
            }
            if factors.is_empty() {
                out.push_str(&mag);
            } else if mag == "1" {
                out.push_str(&factors.join("*"));
            } else if mag == "i" {
                out.push_str("i*");
                out.push_str(&factors.join("*"));
            } else {
                out.push_str(&mag);
                out.push('*');
                out.push_str(&factors.join("*"));
            }
        }
        write!(f, "{out}")
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Ring {
        Ring::new(&["t", "q", "a"])
    }

    fn v(r: &Ring, n: &str) -> MultiPoly {
        MultiPoly::var(r, n)
    }

    #[test]
    fn registry_order_is_applied() {
        let r = Ring::new(&["a", "q", "t", "w1"]);
        assert_eq!(r.vars(), &["t", "q", "a", "w1"]);
    }

    #[test]
    fn add_mul_basics() {
        let r = ring();
        let q = v(&r, "q");
        let t = v(&r, "t");
        let p = q.add(&t).mul(&q.sub(&t));
        let expect = q.mul(&q).sub(&t.mul(&t));
        assert_eq!(p, expect);
    }

    #[test]
    fn exact_division() {
        let r = ring();
        let q = v(&r, "q");
        let one = MultiPoly::one(&r);
        // (q^2 - 1) / (q - 1) = q + 1
        let num = q.pow(2).sub(&one);
        let den = q.sub(&one);
        assert_eq!(num.exact_div(&den).unwrap(), q.add(&one));
        assert!(q.pow(2).exact_div(&q.add(&one)).is_none());
    }

    #[test]
    fn gcd_simple() {
        let r = ring();
        let q = v(&r, "q");
        let t = v(&r, "t");
        let one = MultiPoly::one(&r);
        let f = q.sub(&t).mul(&q.add(&one)).mul(&q.add(&one));
        let g = q.sub(&t).mul(&q.add(&one)).mul(&t.add(&one));
        let h = f.gcd(&g);
        assert_eq!(h, q.sub(&t).mul(&q.add(&one)).monic());
        // coprime
        assert_eq!(q.gcd(&t.add(&one)), one);
    }

    #[test]
    fn gcd_with_gaussian_coeffs() {
        let r = ring();
        let q = v(&r, "q");
        let i = MultiPoly::constant(&r, GaussRat::i());
        // (q - i)(q + i) = q^2 + 1
        let f = q.sub(&i).mul(&q.add(&i));
        let g = q.sub(&i).mul(&q.clone());
        let h = f.gcd(&g);
        assert_eq!(h, q.sub(&i));
    }

    #[test]
    fn display_canonical() {
        let r = ring();
        let q = v(&r, "q");
        let t = v(&r, "t");
        let p = q
            .pow(2)
            .mul(&t)
            .sub(&MultiPoly::int(&r, 2).mul(&q))
            .add(&MultiPoly::one(&r));
        assert_eq!(p.to_string(), "t*q^2 - 2*q + 1");
    }
}
