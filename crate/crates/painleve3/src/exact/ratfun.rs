//! Exact multivariate rational functions: the universal value type of the
//! symbolic layer.
//!
//! Invariants of the canonical form: the denominator is nonzero, coprime to
//! the numerator, and its graded-lex leading coefficient is 1. `normalize` is
//! idempotent and equality of canonical forms agrees with cross-multiplication.

use super::gaussrat::GaussRat;
use super::poly::{MultiPoly, Ring};
use super::{ExactError, ExactResult};
use num_complex::Complex64;
use std::collections::HashMap;
use std::fmt;

#[derive(Clone, PartialEq)]
pub struct RatFun {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFun {
    /// Build `num/den` in canonical form.
    pub fn new(num: MultiPoly, den: MultiPoly) -> ExactResult<RatFun> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: MultiPoly, den: MultiPoly) -> RatFun {
        if num.is_zero() {
            return RatFun {
                num,
                den: MultiPoly::one(den.ring()),
            };
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = if g.is_constant() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides"),
                den.exact_div(&g).expect("gcd divides"),
            )
        };
        let lc = d.leading_coeff();
        if !lc.is_one() {
            let inv = lc.inv();
            n = n.mul_scalar(&inv);
            d = d.mul_scalar(&inv);
        }
        RatFun { num: n, den: d }
    }

    /// The canonical representative (idempotent).
    pub fn normalize(&self) -> RatFun {
        Self::reduced(self.num.clone(), self.den.clone())
    }

    pub fn from_poly(p: MultiPoly) -> RatFun {
        let one = MultiPoly::one(p.ring());
        RatFun { num: p, den: one }
    }

    pub fn zero(ring: &Ring) -> RatFun {
        RatFun::from_poly(MultiPoly::zero(ring))
    }

    pub fn one(ring: &Ring) -> RatFun {
        RatFun::from_poly(MultiPoly::one(ring))
    }

    pub fn int(ring: &Ring, n: i64) -> RatFun {
        RatFun::from_poly(MultiPoly::int(ring, n))
    }

    pub fn constant(ring: &Ring, c: GaussRat) -> RatFun {
        RatFun::from_poly(MultiPoly::constant(ring, c))
    }

    pub fn var(ring: &Ring, name: &str) -> RatFun {
        RatFun::from_poly(MultiPoly::var(ring, name))
    }

    pub fn ratio(ring: &Ring, p: i64, q: i64) -> RatFun {
        RatFun::constant(ring, GaussRat::from_ratio(p, q))
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn ring(&self) -> &Ring {
        self.num.ring()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The constant value, if constant.
    pub fn as_constant(&self) -> Option<GaussRat> {
        match (self.num.as_constant(), self.den.as_constant()) {
            (Some(n), Some(d)) => Some(&n / &d),
            _ => None,
        }
    }

    pub fn add(&self, o: &RatFun) -> RatFun {
        RatFun::reduced(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn sub(&self, o: &RatFun) -> RatFun {
        RatFun::reduced(
            self.num.mul(&o.den).sub(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn neg(&self) -> RatFun {
        RatFun {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &RatFun) -> RatFun {
        RatFun::reduced(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn mul_scalar(&self, c: &GaussRat) -> RatFun {
        RatFun {
            num: self.num.mul_scalar(c),
            den: self.den.clone(),
        }
    }

    pub fn div(&self, o: &RatFun) -> ExactResult<RatFun> {
        if o.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(RatFun::reduced(
            self.num.mul(&o.den),
            self.den.mul(&o.num),
        ))
    }

    pub fn inv(&self) -> ExactResult<RatFun> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(RatFun::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, n: i64) -> ExactResult<RatFun> {
        if n < 0 {
            return self.inv()?.pow(-n);
        }
        Ok(RatFun::reduced(
            self.num.pow(n as u32),
            self.den.pow(n as u32),
        ))
    }

    /// Substitute the given bindings (by variable name); unbound variables
    /// stay themselves. Errors if a denominator vanishes identically.
    /// Bindings must live in a common ring, which becomes the result ring.
    pub fn substitute(&self, bindings: &HashMap<String, RatFun>) -> ExactResult<RatFun> {
        let target = bindings
            .values()
            .next()
            .map(|f| f.ring().clone())
            .unwrap_or_else(|| self.ring().clone());
        let n = poly_subst(&self.num, bindings, &target)?;
        let d = poly_subst(&self.den, bindings, &target)?;
        if d.is_zero() {
            return Err(ExactError::PoleInSubstitution(self.den.to_string()));
        }
        n.div(&d)
    }

    /// Substitute a single variable.
    pub fn subst_var(&self, name: &str, value: &RatFun) -> ExactResult<RatFun> {
        let mut m = HashMap::new();
        m.insert(name.to_string(), value.clone());
        self.substitute(&m)
    }

    /// Map into another ring by variable name (no substitution).
    pub fn map_ring(&self, target: &Ring) -> Option<RatFun> {
        Some(RatFun {
            num: self.num.map_ring(target)?,
            den: self.den.map_ring(target)?,
        })
    }

    /// Numeric evaluation; every occurring variable must be bound.
    pub fn eval_c64(&self, vals: &HashMap<String, Complex64>) -> Complex64 {
        self.num.eval_c64(vals) / self.den.eval_c64(vals)
    }
}

/// Substitute into a polynomial, producing a rational function over `target`.
/// Variables not in `bindings` must exist in `target`. Works over a single
/// common denominator so no gcd is taken until the final reduction.
fn poly_subst(
    p: &MultiPoly,
    bindings: &HashMap<String, RatFun>,
    target: &Ring,
) -> ExactResult<RatFun> {
    let ring = p.ring();
    let n = ring.num_vars();
    // Per variable: image (num, den) in target ring, or None when kept.
    let mut images: Vec<Option<(MultiPoly, MultiPoly)>> = Vec::with_capacity(n);
    let mut maxdeg: Vec<u16> = vec![0; n];
    for (m, _) in p.terms() {
        for k in 0..n {
            maxdeg[k] = maxdeg[k].max(m[k]);
        }
    }
    for (k, v) in ring.vars().iter().enumerate() {
        if let Some(b) = bindings.get(v) {
            let b = b
                .map_ring(target)
                .ok_or_else(|| ExactError::UnknownIndeterminate(v.clone()))?;
            images.push(Some((b.num().clone(), b.den().clone())));
        } else {
            if target.var_index(v).is_none() && maxdeg[k] > 0 {
                return Err(ExactError::UnknownIndeterminate(v.clone()));
            }
            images.push(None);
        }
    }
    // Power caches for numerators and denominators of bound variables.
    let mut npow: Vec<Vec<MultiPoly>> = Vec::with_capacity(n);
    let mut dpow: Vec<Vec<MultiPoly>> = Vec::with_capacity(n);
    for (k, img) in images.iter().enumerate() {
        match img {
            Some((ni, di)) if maxdeg[k] > 0 => {
                let mut np = vec![MultiPoly::one(target)];
                let mut dp = vec![MultiPoly::one(target)];
                for e in 1..=maxdeg[k] as usize {
                    np.push(np[e - 1].mul(ni));
                    dp.push(dp[e - 1].mul(di));
                }
                npow.push(np);
                dpow.push(dp);
            }
            _ => {
                npow.push(vec![]);
                dpow.push(vec![]);
            }
        }
    }
    // Common denominator: prod over bound vars of d_k^{maxdeg_k}.
    let mut denom = MultiPoly::one(target);
    for k in 0..n {
        if images[k].is_some() && maxdeg[k] > 0 {
            denom = denom.mul(&dpow[k][maxdeg[k] as usize]);
        }
    }
    let mut numer = MultiPoly::zero(target);
    for (m, c) in p.terms() {
        let mut term = MultiPoly::constant(target, c.clone());
        for k in 0..n {
            let e = m[k] as usize;
            match &images[k] {
                Some(_) => {
                    if maxdeg[k] > 0 {
                        if e > 0 {
                            term = term.mul(&npow[k][e]);
                        }
                        let co = maxdeg[k] as usize - e;
                        if co > 0 {
                            term = term.mul(&dpow[k][co]);
                        }
                    }
                }
                None => {
                    if e > 0 {
                        let vi = target
                            .var_index(&ring.vars()[k])
                            .expect("checked above");
                        term = term.mul_var_pow(vi, e as u16);
                    }
                }
            }
        }
        numer = numer.add(&term);
    }
    RatFun::new(numer, denom)
}

impl fmt::Display for RatFun {
    /// Canonical form `num` or `(num)/(den)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().map(|c| c.is_one()).unwrap_or(false) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Ring {
        Ring::new(&["t", "q", "a", "theta0"])
    }

    #[test]
    fn cancel_common_factor() {
        let r = ring();
        let q = MultiPoly::var(&r, "q");
        let one = MultiPoly::one(&r);
        // (q^2-1)/(q-1) -> q+1
        let f = RatFun::new(q.pow(2).sub(&one), q.sub(&one)).unwrap();
        assert_eq!(f, RatFun::from_poly(q.add(&one)));
    }

    #[test]
    fn inverse_pair() {
        let r = ring();
        let t = RatFun::var(&r, "t");
        let q = RatFun::var(&r, "q");
        let f = t.div(&q).unwrap().mul(&q.div(&t).unwrap());
        assert_eq!(f, RatFun::one(&r));
    }

    #[test]
    fn substitution_is_homomorphic() {
        let r = ring();
        let q = RatFun::var(&r, "q");
        let t = RatFun::var(&r, "t");
        let f = q.pow(2).unwrap();
        let mut b = HashMap::new();
        b.insert("q".to_string(), t.add(&RatFun::one(&r)));
        // q^2 with q -> t+1 gives t^2+2t+1
        let expect = t
            .pow(2)
            .unwrap()
            .add(&t.mul_scalar(&GaussRat::from_int(2)))
            .add(&RatFun::one(&r));
        assert_eq!(f.substitute(&b).unwrap(), expect);
    }

    #[test]
    fn substitution_pole_is_an_error() {
        let r = ring();
        let q = RatFun::var(&r, "q");
        let f = RatFun::one(&r).div(&q).unwrap();
        let mut b = HashMap::new();
        b.insert("q".to_string(), RatFun::zero(&r));
        assert!(matches!(
            f.substitute(&b),
            Err(ExactError::PoleInSubstitution(_))
        ));
    }

    #[test]
    fn b1_denominator_factor_division() {
        // ((2a-t-theta0*q)^2 - t^2 q^4)/((2a-t-theta0*q+t*q^2)) = 2a-t-theta0*q-t*q^2
        let r = ring();
        let q = MultiPoly::var(&r, "q");
        let t = MultiPoly::var(&r, "t");
        let a = MultiPoly::var(&r, "a");
        let th = MultiPoly::var(&r, "theta0");
        let p = a
            .mul_scalar(&GaussRat::from_int(2))
            .sub(&t)
            .sub(&th.mul(&q));
        let tq2 = t.mul(&q.pow(2));
        let num = p.pow(2).sub(&t.pow(2).mul(&q.pow(4)));
        let den = p.add(&tq2);
        let f = RatFun::new(num, den).unwrap();
        assert_eq!(f, RatFun::from_poly(p.sub(&tq2)));
    }
}
