//! Floating-point simplex used only to guess an optimal basis, which is then
//! certified exactly: the basis systems are solved over the rationals and the
//! resulting primal and dual points are checked for feasibility.

use super::Rational;

const PIVOT_TOL: f64 = 1e-9;
const COST_TOL: f64 = 1e-9;
const FEAS_TOL: f64 = 1e-9;

/// For `max c·x, A x ≤ b, x ≥ 0` given as dense rows, returns an exactly
/// certified optimal `x` and the number of floating-point pivots, or `None`
/// when no certified optimum was found.
pub(super) fn certified_optimum(
    ncols: usize,
    rows: &[(Vec<Rational>, Rational)],
    cost: &[Rational],
) -> (Option<Vec<Rational>>, usize) {
    let mut t = FloatDict::new(ncols, rows);
    let Some(()) = t.phase_one() else {
        return (None, t.pivots);
    };
    let fcost: Vec<f64> = cost.iter().map(Rational::to_f64).collect();
    t.set_objective(&fcost);
    t.perturb();
    if t.optimize().is_none() || t.restore_feasibility().is_none() {
        return (None, t.pivots);
    }
    let structural: Vec<usize> = t.basic.iter().copied().filter(|&v| v < ncols).collect();
    let tight: Vec<usize> = t.nonbasic.iter().copied().filter(|&v| v >= ncols).map(|v| v - ncols).collect();
    (certify(ncols, rows, cost, &structural, &tight), t.pivots)
}

struct FloatDict {
    d: Vec<Vec<f64>>,
    beta: Vec<f64>,
    /// Perturbed basic values used by the primal ratio test.
    shifted: Vec<f64>,
    basic: Vec<usize>,
    nonbasic: Vec<usize>,
    obj: Vec<f64>,
    /// Devex reference weights of the nonbasic columns.
    weight: Vec<f64>,
    pivots: usize,
    limit: usize,
}

impl FloatDict {
    fn new(ncols: usize, rows: &[(Vec<Rational>, Rational)]) -> Self {
        let m = rows.len();
        let d: Vec<Vec<f64>> = rows.iter().map(|(a, _)| a.iter().map(|x| -x.to_f64()).collect()).collect();
        let beta: Vec<f64> = rows.iter().map(|(_, b)| b.to_f64()).collect();
        FloatDict {
            d,
            shifted: beta.clone(),
            beta,
            basic: (ncols..ncols + m).collect(),
            nonbasic: (0..ncols).collect(),
            obj: vec![0.0; ncols],
            weight: vec![1.0; ncols],
            pivots: 0,
            limit: 50 * (ncols + m) + 1000,
        }
    }

    fn pivot(&mut self, r: usize, q: usize) {
        self.pivots += 1;
        let alpha = self.d[r][q];
        let wq = self.weight[q];
        for (j, w) in self.weight.iter_mut().enumerate() {
            let a = self.d[r][j];
            if j != q && a != 0.0 {
                *w = w.max((a / alpha) * (a / alpha) * wq);
            }
        }
        self.weight[q] = (wq / (alpha * alpha)).max(1.0);
        let inv = 1.0 / alpha;
        let row = &mut self.d[r];
        for x in row.iter_mut() {
            *x *= -inv;
        }
        row[q] = inv;
        self.beta[r] *= -inv;
        self.shifted[r] *= -inv;
        let nz: Vec<usize> = (0..row.len()).filter(|&j| row[j] != 0.0).collect();
        let pivot_row = std::mem::take(&mut self.d[r]);
        for i in 0..self.d.len() {
            if i == r {
                continue;
            }
            let f = self.d[i][q];
            if f == 0.0 {
                continue;
            }
            self.d[i][q] = 0.0;
            let row = &mut self.d[i];
            for &j in &nz {
                row[j] += f * pivot_row[j];
            }
            self.beta[i] += f * self.beta[r];
            self.shifted[i] += f * self.shifted[r];
        }
        let f = self.obj[q];
        if f != 0.0 {
            self.obj[q] = 0.0;
            for &j in &nz {
                self.obj[j] += f * pivot_row[j];
            }
        }
        self.d[r] = pivot_row;
        std::mem::swap(&mut self.basic[r], &mut self.nonbasic[q]);
    }

    fn entering(&self) -> Option<usize> {
        let mut best: Option<(usize, f64)> = None;
        for (j, &c) in self.obj.iter().enumerate() {
            let score = c * c / self.weight[j];
            if c > COST_TOL && best.is_none_or(|(_, b)| score > b) {
                best = Some((j, score));
            }
        }
        best.map(|(j, _)| j)
    }

    /// Minimum ratio over perturbed values, near ties broken by the larger pivot.
    fn leaving(&self, q: usize) -> Option<usize> {
        let mut best: Option<(usize, f64)> = None;
        for i in 0..self.d.len() {
            let a = self.d[i][q];
            if a >= -PIVOT_TOL {
                continue;
            }
            let ratio = self.shifted[i].max(0.0) / -a;
            best = match best {
                None => Some((i, ratio)),
                Some((b, br)) => {
                    if ratio < br - 1e-12 || (ratio <= br + 1e-12 && a < self.d[b][q]) {
                        Some((i, ratio))
                    } else {
                        Some((b, br))
                    }
                }
            };
        }
        best.map(|(i, _)| i)
    }

    /// `None` when unbounded or out of iterations.
    fn optimize(&mut self) -> Option<()> {
        loop {
            if self.pivots > self.limit {
                return None;
            }
            let Some(q) = self.entering() else {
                return Some(());
            };
            let r = self.leaving(q)?;
            self.pivot(r, q);
        }
    }

    fn phase_one(&mut self) -> Option<()> {
        let worst = (0..self.beta.len()).filter(|&i| self.beta[i] < -FEAS_TOL).min_by(|&a, &b| {
            self.beta[a].total_cmp(&self.beta[b])
        });
        let Some(r) = worst else {
            return Some(());
        };
        let aux = self.basic.len() + self.nonbasic.len();
        let q = self.nonbasic.len();
        for row in &mut self.d {
            row.push(1.0);
        }
        self.nonbasic.push(aux);
        self.weight = vec![1.0; q + 1];
        self.obj = vec![0.0; q + 1];
        self.obj[q] = -1.0;
        self.pivot(r, q);
        self.optimize()?;
        let aux_value = self.basic.iter().position(|&b| b == aux).map_or(0.0, |r| self.beta[r]);
        if aux_value > FEAS_TOL {
            return None;
        }
        if let Some(r) = self.basic.iter().position(|&b| b == aux) {
            let j = (0..self.nonbasic.len())
                .filter(|&j| self.d[r][j].abs() > PIVOT_TOL)
                .max_by(|&a, &b| self.d[r][a].abs().total_cmp(&self.d[r][b].abs()))?;
            self.pivot(r, j);
        }
        let col = self.nonbasic.iter().position(|&v| v == aux)?;
        for row in &mut self.d {
            row.remove(col);
        }
        self.nonbasic.remove(col);
        self.weight.remove(col);
        Some(())
    }

    fn set_objective(&mut self, cost: &[f64]) {
        let width = self.nonbasic.len();
        self.obj = vec![0.0; width];
        self.weight = vec![1.0; width];
        for (j, &v) in self.nonbasic.iter().enumerate() {
            if v < cost.len() {
                self.obj[j] += cost[v];
            }
        }
        for (r, &v) in self.basic.iter().enumerate() {
            if v < cost.len() && cost[v] != 0.0 {
                for j in 0..width {
                    self.obj[j] += cost[v] * self.d[r][j];
                }
            }
        }
    }

    /// Raises every basic value by a small distinct amount.
    fn perturb(&mut self) {
        let mut state: u64 = 0x2545_f491_4f6c_dd1d;
        for (s, b) in self.shifted.iter_mut().zip(&self.beta) {
            state = state.wrapping_mul(6_364_136_223_846_793_005).wrapping_add(1_442_695_040_888_963_407);
            let u = (state >> 11) as f64 / (1u64 << 53) as f64;
            *s = b.max(0.0) + 1e-7 * (1.0 + u) * (1.0 + b.abs());
        }
    }

    /// Dual simplex on the unperturbed values.
    fn restore_feasibility(&mut self) -> Option<()> {
        loop {
            if self.pivots > self.limit {
                return None;
            }
            let r = (0..self.beta.len())
                .filter(|&i| self.beta[i] < -FEAS_TOL)
                .min_by(|&a, &b| self.beta[a].total_cmp(&self.beta[b]));
            let Some(r) = r else {
                return Some(());
            };
            let mut best: Option<(usize, f64)> = None;
            for j in 0..self.nonbasic.len() {
                let a = self.d[r][j];
                if a <= PIVOT_TOL {
                    continue;
                }
                let ratio = (-self.obj[j]).max(0.0) / a;
                if best.is_none_or(|(_, br)| ratio < br) {
                    best = Some((j, ratio));
                }
            }
            let (q, _) = best?;
            self.pivot(r, q);
            self.shifted.clone_from(&self.beta);
        }
    }
}

/// Solves `M z = rhs` for square `M` exactly; `None` if singular.
fn solve_square(mut m: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> Option<Vec<Rational>> {
    let k = rhs.len();
    let mut order = Vec::with_capacity(k);
    let mut used = vec![false; k];
    for col in 0..k {
        let r = (0..k)
            .filter(|&r| !used[r] && !m[r][col].is_zero())
            .min_by_key(|&r| m[r].iter().filter(|x| !x.is_zero()).count())?;
        used[r] = true;
        order.push(r);
        let inv = m[r][col].recip();
        for x in m[r].iter_mut().skip(col) {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        rhs[r] = &rhs[r] * &inv;
        let pivot_row = m[r].clone();
        let nz: Vec<usize> = (col..k).filter(|&j| !pivot_row[j].is_zero()).collect();
        for i in 0..k {
            if i == r || m[i][col].is_zero() {
                continue;
            }
            let f = m[i][col].clone();
            for &j in &nz {
                let delta = &f * &pivot_row[j];
                m[i][j] -= &delta;
            }
            let delta = &f * &rhs[r];
            rhs[i] -= &delta;
        }
    }
    Some(order.into_iter().map(|r| rhs[r].clone()).collect())
}

/// Exact primal and dual solves for the basis given by basic structural
/// columns and tight rows, followed by a full feasibility check of both.
fn certify(
    ncols: usize,
    rows: &[(Vec<Rational>, Rational)],
    cost: &[Rational],
    structural: &[usize],
    tight: &[usize],
) -> Option<Vec<Rational>> {
    if structural.len() != tight.len() {
        return None;
    }
    let k = structural.len();
    let primal_m: Vec<Vec<Rational>> =
        tight.iter().map(|&r| structural.iter().map(|&c| rows[r].0[c].clone()).collect()).collect();
    let dual_m: Vec<Vec<Rational>> =
        (0..k).map(|s| (0..k).map(|t| primal_m[t][s].clone()).collect()).collect();
    let xs = solve_square(primal_m, tight.iter().map(|&r| rows[r].1.clone()).collect())?;
    let ys = solve_square(dual_m, structural.iter().map(|&c| cost[c].clone()).collect())?;

    let mut x = vec![Rational::ZERO; ncols];
    for (&c, v) in structural.iter().zip(xs) {
        if v.is_negative() {
            return None;
        }
        x[c] = v;
    }
    for (a, b) in rows {
        let lhs: Rational = a.iter().zip(&x).filter(|(c, v)| !c.is_zero() && !v.is_zero()).map(|(c, v)| c * v).sum();
        if &lhs > b {
            return None;
        }
    }
    let mut y = vec![Rational::ZERO; rows.len()];
    for (&r, v) in tight.iter().zip(ys) {
        if v.is_negative() {
            return None;
        }
        y[r] = v;
    }
    for (c, cj) in cost.iter().enumerate() {
        let lhs: Rational =
            rows.iter().zip(&y).filter(|((a, _), v)| !a[c].is_zero() && !v.is_zero()).map(|((a, _), v)| &a[c] * v).sum();
        if &lhs < cj {
            return None;
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Rational {
        Rational::from_int(v)
    }

    #[test]
    fn certifies_a_small_optimum() {
        // max 3x + 2y, x + y ≤ 4, x + 3y ≤ 6, x ≤ 3.
        let rows = vec![(vec![q(1), q(1)], q(4)), (vec![q(1), q(3)], q(6)), (vec![q(1), q(0)], q(3))];
        let (x, _) = certified_optimum(2, &rows, &[q(3), q(2)]);
        assert_eq!(x, Some(vec![q(3), q(1)]));
    }

    #[test]
    fn wrong_basis_is_rejected() {
        let rows = vec![(vec![q(1), q(1)], q(4)), (vec![q(1), q(3)], q(6)), (vec![q(1), q(0)], q(3))];
        assert_eq!(certify(2, &rows, &[q(3), q(2)], &[0, 1], &[0, 1]), None);
        assert_eq!(certify(2, &rows, &[q(3), q(2)], &[0], &[]), None);
    }

    #[test]
    fn singular_system() {
        assert_eq!(solve_square(vec![vec![q(1), q(2)], vec![q(2), q(4)]], vec![q(1), q(2)]), None);
        assert_eq!(solve_square(vec![vec![q(0), q(2)], vec![q(3), q(1)]], vec![q(2), q(4)]), Some(vec![q(1), q(1)]));
    }
}
