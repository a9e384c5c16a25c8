//! Linear solving over the rational-function field.
//!
//! Equations are rational functions understood as `= 0`; unknowns are ring
//! variables. Each equation must have total degree at most one in the set of
//! unknowns. Denominators are cleared, the polynomial system is reduced by
//! fraction-free (Bareiss) elimination with content stripping, and solutions
//! are returned over the rational-function field of the remaining variables.

use super::gaussrat::GaussRat;
use super::poly::{MultiPoly, Ring};
use super::ratfun::RatFun;
use super::{ExactError, ExactResult};
use std::collections::HashMap;

/// Outcome of a linear solve.
#[derive(Clone, Debug)]
pub enum LinearSolution {
    /// Every unknown is determined.
    Unique(HashMap<String, RatFun>),
    /// Underdetermined: a particular solution with the free unknowns listed;
    /// free unknowns are assigned themselves in the map.
    Parametrized {
        solution: HashMap<String, RatFun>,
        free: Vec<String>,
    },
    /// The system has no solution.
    Inconsistent,
}

impl LinearSolution {
    pub fn unique(&self) -> Option<&HashMap<String, RatFun>> {
        match self {
            LinearSolution::Unique(m) => Some(m),
            _ => None,
        }
    }

    pub fn any_solution(&self) -> Option<&HashMap<String, RatFun>> {
        match self {
            LinearSolution::Unique(m) => Some(m),
            LinearSolution::Parametrized { solution, .. } => Some(solution),
            LinearSolution::Inconsistent => None,
        }
    }
}

/// Solve the system `equations = 0` for `unknowns`.
///
/// The result maps unknown names to rational functions in the non-unknown
/// variables (free unknowns map to themselves in the parametrized case).
pub fn solve_linear(
    ring: &Ring,
    unknowns: &[&str],
    equations: &[RatFun],
) -> ExactResult<LinearSolution> {
    let mut uidx = Vec::with_capacity(unknowns.len());
    for u in unknowns {
        uidx.push(
            ring.var_index(u)
                .ok_or_else(|| ExactError::UnknownIndeterminate((*u).to_string()))?,
        );
    }
    let m = unknowns.len();

    // Rows: coefficients [c_1 .. c_m | rhs] as polynomials, where the
    // equation is sum c_j x_j + b = 0, stored rhs = -b.
    let mut rows: Vec<Vec<MultiPoly>> = Vec::new();
    for eq in equations {
        let p = eq.num(); // eq = 0 iff numerator = 0
        let mut coeffs = vec![MultiPoly::zero(ring); m + 1];
        for (mono, c) in p.terms() {
            // total degree in unknowns
            let mut du = 0u32;
            let mut which = None;
            for (j, &vi) in uidx.iter().enumerate() {
                let e = mono[vi] as u32;
                if e > 0 {
                    du += e;
                    which = Some(j);
                }
            }
            if du > 1 {
                let name = which.map(|j| unknowns[j]).unwrap_or("?");
                return Err(ExactError::NonLinearUnknown(name.to_string()));
            }
            if du == 1 {
                let j = which.unwrap();
                let mut mono2 = mono.clone();
                mono2[uidx[j]] = 0;
                let term = MultiPoly::from_mono(ring, mono2, c.clone());
                coeffs[j] = coeffs[j].add(&term);
            } else {
                let term = MultiPoly::from_mono(ring, mono.clone(), c.clone());
                coeffs[m] = coeffs[m].sub(&term); // rhs = -b
            }
        }
        if coeffs.iter().all(|c| c.is_zero()) {
            continue; // trivial equation
        }
        // Strip content-ish scalar: divide by leading coefficient of the
        // first nonzero entry to keep numbers small.
        rows.push(coeffs);
    }

    // Fraction-free Gaussian elimination (Bareiss) with content stripping.
    let nrows = rows.len();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut pivot_rows: Vec<usize> = Vec::new();
    let mut used = vec![false; nrows];
    for col in 0..m {
        // Find pivot: unused row with nonzero coefficient, fewest terms.
        let mut best: Option<(usize, usize)> = None;
        for (r, row) in rows.iter().enumerate() {
            if used[r] || row[col].is_zero() {
                continue;
            }
            let sz = row[col].num_terms();
            if best.map(|(_, s)| sz < s).unwrap_or(true) {
                best = Some((r, sz));
            }
        }
        let Some((pr, _)) = best else {
            continue;
        };
        used[pr] = true;
        pivot_rows.push(pr);
        pivot_cols.push(col);
        let piv = rows[pr][col].clone();
        for r in 0..nrows {
            if r == pr || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            let mut newrow = Vec::with_capacity(m + 1);
            for j in 0..=m {
                // new = piv*row[j] - factor*pivrow[j]
                let v = rows[r][j].mul(&piv).sub(&rows[pr][j].mul(&factor));
                newrow.push(v);
            }
            // Content strip to control growth.
            let mut g = MultiPoly::zero(ring);
            for v in &newrow {
                if !v.is_zero() {
                    g = g.gcd(v);
                    if g.is_constant() {
                        break;
                    }
                }
            }
            if !g.is_zero() && !g.is_constant() {
                for v in newrow.iter_mut() {
                    *v = v.exact_div(&g).expect("content divides");
                }
            }
            rows[r] = newrow;
        }
    }

    // Inconsistency: a row with all unknown-coefficients zero but rhs nonzero.
    for (r, row) in rows.iter().enumerate() {
        if used[r] {
            continue;
        }
        if row[..m].iter().all(|c| c.is_zero()) && !row[m].is_zero() {
            return Ok(LinearSolution::Inconsistent);
        }
    }

    // Back-substitution: after full elimination each pivot row determines its
    // unknown in terms of free unknowns and the rhs.
    let free_cols: Vec<usize> = (0..m).filter(|c| !pivot_cols.contains(c)).collect();
    let mut sol: HashMap<String, RatFun> = HashMap::new();
    for &fc in &free_cols {
        sol.insert(
            unknowns[fc].to_string(),
            RatFun::var(ring, unknowns[fc]),
        );
    }
    for (k, &col) in pivot_cols.iter().enumerate() {
        let row = &rows[pivot_rows[k]];
        // piv * x_col + sum_{free} c_j x_j = rhs
        let piv = RatFun::from_poly(row[col].clone());
        let mut rhs = RatFun::from_poly(row[m].clone());
        for &fc in &free_cols {
            if !row[fc].is_zero() {
                let xj = RatFun::var(ring, unknowns[fc]);
                rhs = rhs.sub(&RatFun::from_poly(row[fc].clone()).mul(&xj));
            }
        }
        // After full Bareiss elimination the pivot row has zeros in all other
        // pivot columns.
        sol.insert(unknowns[col].to_string(), rhs.div(&piv)?);
    }

    if free_cols.is_empty() {
        Ok(LinearSolution::Unique(sol))
    } else {
        Ok(LinearSolution::Parametrized {
            solution: sol,
            free: free_cols.iter().map(|&c| unknowns[c].to_string()).collect(),
        })
    }
}

impl MultiPoly {
    /// Single-term polynomial (helper for the solver).
    pub(crate) fn from_mono(ring: &Ring, mono: super::poly::Mono, c: GaussRat) -> MultiPoly {
        MultiPoly::from_sorted_unchecked(ring, vec![(mono, c)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_equation() {
        let ring = Ring::new(&["q", "x0"]);
        let x = RatFun::var(&ring, "x0");
        let q = RatFun::var(&ring, "q");
        let sol = solve_linear(&ring, &["x0"], &[x.sub(&q)]).unwrap();
        let m = sol.unique().unwrap();
        assert_eq!(m["x0"], q);
    }

    #[test]
    fn two_by_two() {
        let ring = Ring::new(&["x0", "y0"]);
        let x = RatFun::var(&ring, "x0");
        let y = RatFun::var(&ring, "y0");
        let one = RatFun::one(&ring);
        let sol = solve_linear(
            &ring,
            &["x0", "y0"],
            &[x.add(&y).sub(&one), x.sub(&y).sub(&one)],
        )
        .unwrap();
        let m = sol.unique().unwrap();
        assert_eq!(m["x0"], one);
        assert!(m["y0"].is_zero());
    }

    #[test]
    fn inconsistent_detected() {
        let ring = Ring::new(&["x0"]);
        let x = RatFun::var(&ring, "x0");
        let one = RatFun::one(&ring);
        let sol = solve_linear(&ring, &["x0"], &[x.sub(&one), x.add(&one)]).unwrap();
        assert!(matches!(sol, LinearSolution::Inconsistent));
    }

    #[test]
    fn nonlinear_is_an_error() {
        let ring = Ring::new(&["x0"]);
        let x = RatFun::var(&ring, "x0");
        let r = solve_linear(&ring, &["x0"], &[x.mul(&x)]);
        assert!(matches!(r, Err(ExactError::NonLinearUnknown(_))));
    }

    #[test]
    fn parametrized_family() {
        let ring = Ring::new(&["x0", "y0", "t"]);
        let x = RatFun::var(&ring, "x0");
        let y = RatFun::var(&ring, "y0");
        let t = RatFun::var(&ring, "t");
        // x + y = t : one pivot, one free unknown
        let sol = solve_linear(&ring, &["x0", "y0"], &[x.add(&y).sub(&t)]).unwrap();
        match sol {
            LinearSolution::Parametrized { solution, free } => {
                assert_eq!(free.len(), 1);
                // back-substitute: x + y - t must vanish
                let back = solution["x0"].add(&solution["y0"]).sub(&t);
                assert!(back.is_zero());
            }
            _ => panic!("expected parametrized"),
        }
    }
}
