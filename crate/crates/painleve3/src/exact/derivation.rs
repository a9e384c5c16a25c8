//! Formal derivations: a derivation `D` is declared by its independent
//! variable (`D(t) = 1`), the images of the dependent generators, and a set
//! of constants. `apply` extends `D` to rational functions by linearity, the
//! Leibniz rule and the quotient rule.

use super::poly::{MultiPoly, Ring};
use super::ratfun::RatFun;
use super::{ExactError, ExactResult};

#[derive(Clone, Debug)]
pub struct DerivationSpec {
    ring: Ring,
    /// Image of each ring variable (independent variable maps to 1,
    /// constants map to 0).
    images: Vec<RatFun>,
}

impl DerivationSpec {
    /// Build a derivation on `ring` with independent variable `wrt`,
    /// the given images for dependent generators, and everything else in
    /// `constants`. Every ring variable must be covered exactly once.
    pub fn new(
        ring: &Ring,
        wrt: &str,
        images: &[(&str, RatFun)],
        constants: &[&str],
    ) -> ExactResult<DerivationSpec> {
        let n = ring.num_vars();
        let mut out: Vec<Option<RatFun>> = vec![None; n];
        let set = |out: &mut Vec<Option<RatFun>>, name: &str, v: RatFun| -> ExactResult<()> {
            let i = ring
                .var_index(name)
                .ok_or_else(|| ExactError::UnknownIndeterminate(name.to_string()))?;
            if out[i].is_some() {
                return Err(ExactError::UncoveredIndeterminate(format!(
                    "{name} assigned twice"
                )));
            }
            out[i] = Some(v);
            Ok(())
        };
        set(&mut out, wrt, RatFun::one(ring))?;
        for (name, img) in images {
            let img = img
                .map_ring(ring)
                .ok_or_else(|| ExactError::UnknownIndeterminate((*name).to_string()))?;
            set(&mut out, name, img)?;
        }
        for name in constants {
            set(&mut out, name, RatFun::zero(ring))?;
        }
        let mut images = Vec::with_capacity(n);
        for (i, v) in out.into_iter().enumerate() {
            match v {
                Some(f) => images.push(f),
                None => {
                    return Err(ExactError::UncoveredIndeterminate(
                        ring.vars()[i].clone(),
                    ))
                }
            }
        }
        Ok(DerivationSpec {
            ring: ring.clone(),
            images,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn image(&self, name: &str) -> Option<&RatFun> {
        self.ring.var_index(name).map(|i| &self.images[i])
    }

    /// Apply to a polynomial: `D(p) = sum_v (dp/dv) * D(v)`.
    pub fn apply_poly(&self, p: &MultiPoly) -> ExactResult<RatFun> {
        let p = p
            .map_ring(&self.ring)
            .ok_or_else(|| ExactError::RingMismatch(format!("{:?}", p.ring()), format!("{:?}", self.ring)))?;
        let mut acc = RatFun::zero(&self.ring);
        for (k, img) in self.images.iter().enumerate() {
            if img.is_zero() {
                continue;
            }
            let dp = p.derivative(k);
            if dp.is_zero() {
                continue;
            }
            acc = acc.add(&RatFun::from_poly(dp).mul(img));
        }
        Ok(acc)
    }

    /// Apply to a rational function by the quotient rule.
    pub fn apply(&self, f: &RatFun) -> ExactResult<RatFun> {
        let dn = self.apply_poly(f.num())?;
        let dd = self.apply_poly(f.den())?;
        let den = RatFun::from_poly(
            f.den()
                .map_ring(&self.ring)
                .ok_or_else(|| ExactError::RingMismatch(String::new(), String::new()))?,
        );
        let num = RatFun::from_poly(
            f.num()
                .map_ring(&self.ring)
                .ok_or_else(|| ExactError::RingMismatch(String::new(), String::new()))?,
        );
        // (n/d)' = (n' d - n d')/d^2
        let out = dn
            .mul(&den)
            .sub(&num.mul(&dd))
            .div(&den.mul(&den))?;
        Ok(out)
    }

    /// Second application.
    pub fn apply_twice(&self, f: &RatFun) -> ExactResult<RatFun> {
        self.apply(&self.apply(f)?)
    }
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d6_flow_chain_rule() {
        // D(q) = (4a-q)/t on f = q^2 gives 2q(4a-q)/t.
        let ring = Ring::new(&["t", "q", "a", "theta0", "thetainf"]);
        let q = RatFun::var(&ring, "q");
        let a = RatFun::var(&ring, "a");
        let t = RatFun::var(&ring, "t");
        let dq = a
            .mul_scalar(&GaussRat::from_int(4))
            .sub(&q)
            .div(&t)
            .unwrap();
        let d = DerivationSpec::new(
            &ring,
            "t",
            &[("q", dq.clone()), ("a", RatFun::zero(&ring))],
            &["theta0", "thetainf"],
        )
        .unwrap();
        let f = q.pow(2).unwrap();
        let expect = q.mul_scalar(&GaussRat::from_int(2)).mul(&dq);
        assert_eq!(d.apply(&f).unwrap(), expect);
        // D of a constant symbol is zero
        let th = RatFun::var(&ring, "theta0");
        assert!(d.apply(&th).unwrap().is_zero());
    }

    #[test]
    fn quotient_rule_holds() {
        let ring = Ring::new(&["t", "q"]);
        let q = RatFun::var(&ring, "q");
        let t = RatFun::var(&ring, "t");
        let d = DerivationSpec::new(&ring, "t", &[("q", t.pow(2).unwrap())], &[]).unwrap();
        let f = q.clone();
        let g = q.add(&t);
        let lhs = d.apply(&f.div(&g).unwrap()).unwrap();
        let rhs = d
            .apply(&f)
            .unwrap()
            .mul(&g)
            .sub(&f.mul(&d.apply(&g).unwrap()))
            .div(&g.mul(&g))
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn uncovered_variable_is_an_error() {
        let ring = Ring::new(&["t", "q", "a"]);
        let r = DerivationSpec::new(&ring, "t", &[("q", RatFun::zero(&ring))], &[]);
        assert!(matches!(r, Err(ExactError::UncoveredIndeterminate(_))));
    }
}
