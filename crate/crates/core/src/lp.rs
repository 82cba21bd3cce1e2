//! Exact rational linear programming: a dense two-phase primal simplex with
//! Bland's anti-cycling rule.  No tolerances anywhere — all comparisons are
//! exact, so emptiness and strict-interiority questions are decided, not
//! approximated.

use crate::matrix::{Rat, RatMat};
use num_traits::{One, Zero};

/// Outcome of a linear program.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    /// Optimal value attained; carries the value and an optimal point.
    Optimal(Rat, Vec<Rat>),
    /// No feasible point.
    Infeasible,
    /// Objective unbounded above.
    Unbounded,
}

impl LpOutcome {
    /// The optimal value, when one exists.
    pub fn value(&self) -> Option<&Rat> {
        match self {
            LpOutcome::Optimal(v, _) => Some(v),
            _ => None,
        }
    }
}

/// Maximizes `c·x` subject to `a x = b`, `x ≥ 0`.
pub fn simplex_max(a: &RatMat, b: &[Rat], c: &[Rat]) -> LpOutcome {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    debug_assert!(a.iter().all(|r| r.len() == n));
    debug_assert_eq!(b.len(), m);
    debug_assert_eq!(c.len(), n);

    // Tableau: one row per constraint over n original + m artificial columns
    // plus the right-hand side; rows normalized to b ≥ 0.
    let total = n + m;
    let mut t: RatMat = Vec::with_capacity(m);
    for i in 0..m {
        let mut row: Vec<Rat> = Vec::with_capacity(total + 1);
        let flip = b[i] < Rat::zero();
        for j in 0..n {
            row.push(if flip { -a[i][j].clone() } else { a[i][j].clone() });
        }
        for j in 0..m {
            row.push(if i == j { Rat::one() } else { Rat::zero() });
        }
        row.push(if flip { -b[i].clone() } else { b[i].clone() });
        t.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Phase 1: maximize minus the sum of artificials.
    let mut phase1_cost = vec![Rat::zero(); total];
    for j in n..total {
        phase1_cost[j] = -Rat::one();
    }
    if run_simplex(&mut t, &mut basis, &phase1_cost, total) == Step::Unbounded {
        unreachable!("phase-1 objective is bounded above by zero");
    }
    let phase1_value: Rat = basis
        .iter()
        .enumerate()
        .map(|(i, &j)| {
            if j >= n {
                -t[i][total].clone()
            } else {
                Rat::zero()
            }
        })
        .sum();
    if !phase1_value.is_zero() {
        return LpOutcome::Infeasible;
    }
    // Drive artificial variables out of the basis (pivot on any nonzero
    // original column; fully zero rows are redundant and dropped).
    let mut i = 0;
    while i < basis.len() {
        if basis[i] >= n {
            match (0..n).find(|&j| !t[i][j].is_zero()) {
                Some(j) => pivot(&mut t, &mut basis, i, j),
                None => {
                    t.remove(i);
                    basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }

    // Phase 2: the real objective, with artificial columns frozen.
    let mut phase2_cost = vec![Rat::zero(); total];
    phase2_cost[..n].clone_from_slice(c);
    if run_simplex(&mut t, &mut basis, &phase2_cost, n) == Step::Unbounded {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![Rat::zero(); n];
    for (i, &j) in basis.iter().enumerate() {
        if j < n {
            x[j] = t[i][total].clone();
        }
    }
    let value: Rat = c.iter().zip(&x).map(|(ci, xi)| ci * xi).sum();
    LpOutcome::Optimal(value, x)
}

#[derive(PartialEq)]
enum Step {
    Optimal,
    Unbounded,
}

/// Runs simplex iterations to optimality, allowing entering columns only
/// among the first `allowed` columns.
fn run_simplex(t: &mut RatMat, basis: &mut Vec<usize>, cost: &[Rat], allowed: usize) -> Step {
    let m = t.len();
    let total = cost.len();
    loop {
        // Reduced costs from scratch (Bland's rule: first improving column).
        let mut entering: Option<usize> = None;
        for j in 0..allowed {
            if basis.contains(&j) {
                continue;
            }
            let mut r = cost[j].clone();
            for i in 0..m {
                if !t[i][j].is_zero() {
                    r -= &cost[basis[i]] * &t[i][j];
                }
            }
            if r > Rat::zero() {
                entering = Some(j);
                break;
            }
        }
        let Some(j) = entering else { return Step::Optimal };
        // Ratio test; ties broken by smallest basis index (Bland).
        let mut leave: Option<(usize, Rat)> = None;
        for i in 0..m {
            if t[i][j] > Rat::zero() {
                let ratio = &t[i][total] / &t[i][j];
                leave = match leave {
                    None => Some((i, ratio)),
                    Some((li, lr)) => {
                        if ratio < lr || (ratio == lr && basis[i] < basis[li]) {
                            Some((i, ratio))
                        } else {
                            Some((li, lr))
                        }
                    }
                };
            }
        }
        let Some((i, _)) = leave else {
            return Step::Unbounded;
        };
        pivot(t, basis, i, j);
    }
}

/// Pivots the tableau so that column `j` becomes basic in row `i`.
fn pivot(t: &mut RatMat, basis: &mut [usize], i: usize, j: usize) {
    let width = t[i].len();
    let inv = t[i][j].recip();
    for v in t[i].iter_mut() {
        *v = &*v * &inv;
    }
    for r in 0..t.len() {
        if r != i && !t[r][j].is_zero() {
            let f = t[r][j].clone();
            for c in 0..width {
                let d = &f * &t[i][c];
                t[r][c] -= d;
            }
        }
    }
    basis[i] = j;
}

/// A variable of an equality-form program built with [`EqLp`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Var(usize);

/// Builder for programs `max c·x` s.t. `A x = b` with a mix of free and
/// nonnegative variables; free variables are split internally.
#[derive(Default)]
pub struct EqLp {
    free: Vec<bool>,
    objective: Vec<Rat>,
    rows: Vec<(Vec<(usize, Rat)>, Rat)>,
}

impl EqLp {
    pub fn new() -> Self {
        EqLp::default()
    }

    /// Adds a nonnegative variable with the given objective coefficient.
    pub fn nonneg(&mut self, obj: Rat) -> Var {
        self.free.push(false);
        self.objective.push(obj);
        Var(self.free.len() - 1)
    }

    /// Adds a sign-unrestricted variable with the given objective coefficient.
    pub fn free(&mut self, obj: Rat) -> Var {
        self.free.push(true);
        self.objective.push(obj);
        Var(self.free.len() - 1)
    }

    /// Adds the equality `Σ coeff·var = rhs`.
    pub fn equation(&mut self, terms: Vec<(Var, Rat)>, rhs: Rat) {
        self.rows
            .push((terms.into_iter().map(|(v, c)| (v.0, c)).collect(), rhs));
    }

    /// Solves the program.  In an optimal outcome the solution vector is
    /// indexed by the variables in creation order.
    pub fn solve(&self) -> LpOutcome {
        // Column layout: one column per variable, plus one extra negated
        // column per free variable.
        let nvars = self.free.len();
        let mut neg_col = vec![usize::MAX; nvars];
        let mut ncols = nvars;
        for (v, &is_free) in self.free.iter().enumerate() {
            if is_free {
                neg_col[v] = ncols;
                ncols += 1;
            }
        }
        let mut a = vec![vec![Rat::zero(); ncols]; self.rows.len()];
        let mut b = Vec::with_capacity(self.rows.len());
        for (i, (terms, rhs)) in self.rows.iter().enumerate() {
            for (v, c) in terms {
                a[i][*v] += c.clone();
                if self.free[*v] {
                    a[i][neg_col[*v]] -= c.clone();
                }
            }
            b.push(rhs.clone());
        }
        let mut c = vec![Rat::zero(); ncols];
        for v in 0..nvars {
            c[v] = self.objective[v].clone();
            if self.free[v] {
                c[neg_col[v]] = -self.objective[v].clone();
            }
        }
        match simplex_max(&a, &b, &c) {
            LpOutcome::Optimal(val, x) => {
                let sol = (0..nvars)
                    .map(|v| {
                        if self.free[v] {
                            &x[v] - &x[neg_col[v]]
                        } else {
                            x[v].clone()
                        }
                    })
                    .collect();
                LpOutcome::Optimal(val, sol)
            }
            other => other,
        }
    }
}

/// Rational from a machine integer pair (test helper and convenience).
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(p.into(), q.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_a_textbook_program() {
        // max 3x + 2y s.t. x + y ≤ 4, x + 3y ≤ 6  → x=4, y=0, value 12.
        let mut lp = EqLp::new();
        let x = lp.nonneg(rat(3, 1));
        let y = lp.nonneg(rat(2, 1));
        let s1 = lp.nonneg(Rat::zero());
        let s2 = lp.nonneg(Rat::zero());
        lp.equation(vec![(x, rat(1, 1)), (y, rat(1, 1)), (s1, rat(1, 1))], rat(4, 1));
        lp.equation(vec![(x, rat(1, 1)), (y, rat(3, 1)), (s2, rat(1, 1))], rat(6, 1));
        match lp.solve() {
            LpOutcome::Optimal(v, sol) => {
                assert_eq!(v, rat(12, 1));
                assert_eq!(sol[0], rat(4, 1));
                assert_eq!(sol[1], Rat::zero());
            }
            other => panic!("unexpected outcome {other:?}"),
        }
    }

    #[test]
    fn detects_infeasibility() {
        let mut lp = EqLp::new();
        let x = lp.nonneg(Rat::one());
        lp.equation(vec![(x, rat(1, 1))], rat(-3, 1));
        assert_eq!(lp.solve(), LpOutcome::Infeasible);
    }

    #[test]
    fn detects_unboundedness() {
        let mut lp = EqLp::new();
        let x = lp.free(Rat::one());
        let y = lp.nonneg(Rat::zero());
        lp.equation(vec![(x, rat(1, 1)), (y, rat(-1, 1))], rat(0, 1));
        assert_eq!(lp.solve(), LpOutcome::Unbounded);
    }

    #[test]
    fn strict_interior_of_a_segment() {
        // max t s.t. μ1+μ2 = 1, μ1−μ2 = 0, μ ≥ t: optimum 1/2.
        let mut lp = EqLp::new();
        let t = lp.free(Rat::one());
        let p1 = lp.nonneg(Rat::zero());
        let p2 = lp.nonneg(Rat::zero());
        // μi = pi + t.
        lp.equation(
            vec![(p1, rat(1, 1)), (p2, rat(1, 1)), (t, rat(2, 1))],
            rat(1, 1),
        );
        lp.equation(vec![(p1, rat(1, 1)), (p2, rat(-1, 1))], rat(0, 1));
        assert_eq!(lp.solve().value(), Some(&rat(1, 2)));
    }
}
