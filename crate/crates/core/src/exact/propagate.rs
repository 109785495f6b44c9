//! Interval bound propagation on the per-tree values, in integers.
//!
//! Densities are scaled by the common denominator so that every bound is an
//! exact integer combination of them. Propagation only ever proves
//! infeasibility; surviving configurations go to the LP.

use super::candidates::{Local, Shape};

const MAX_ROUNDS: usize = 64;

pub(crate) struct Bounds {
    n: usize,
    upper: Vec<i64>,
    lower: Vec<i64>,
}

impl Bounds {
    pub fn upper(&self, slot: usize, v: usize) -> i64 {
        self.upper[slot * self.n + v]
    }

    pub fn lower(&self, slot: usize, v: usize) -> i64 {
        self.lower[slot * self.n + v]
    }
}

/// Largest value a monotone tree rooted at `root` can put on each vertex:
/// the widest path bottleneck from the root.
pub(crate) fn widest(local: &Local, f: &[i64], root: usize) -> Vec<i64> {
    let mut best = vec![0; local.n];
    best[root] = f[root];
    let mut changed = true;
    while changed {
        changed = false;
        for v in 0..local.n {
            if v == root {
                continue;
            }
            let via = super::candidates::bits(local.adj[v])
                .map(|w| best[w])
                .max()
                .unwrap_or(0)
                .min(f[v]);
            if via > best[v] {
                best[v] = via;
                changed = true;
            }
        }
    }
    best
}

/// Tightens bounds for `roots.len()` trees, where `shapes[i]` is the known
/// support of tree `i` (if fixed yet) and `widest[i]` its initial upper
/// bound. Returns `None` once the constraints are shown infeasible.
pub(crate) fn propagate(
    local: &Local,
    f: &[i64],
    roots: &[usize],
    shapes: &[Option<&Shape>],
    widest: &[&[i64]],
    full_root: bool,
) -> Option<Bounds> {
    let n = local.n;
    let k = roots.len();
    let mut upper = vec![0i64; k * n];
    let mut lower = vec![0i64; k * n];
    for i in 0..k {
        for v in 0..n {
            upper[i * n + v] = match shapes[i] {
                Some(s) if !s.contains(v) => 0,
                _ => widest[i][v],
            };
        }
        if full_root {
            lower[i * n + roots[i]] = f[roots[i]];
        }
    }

    for _ in 0..MAX_ROUNDS {
        let mut changed = false;
        for i in 0..k {
            let (u, l) = (&mut upper[i * n..(i + 1) * n], &mut lower[i * n..(i + 1) * n]);
            match shapes[i] {
                Some(s) => {
                    for &(c, p) in &s.order {
                        if u[c] > u[p] {
                            u[c] = u[p];
                            changed = true;
                        }
                    }
                    for &(c, p) in s.order.iter().rev() {
                        if l[p] < l[c] {
                            l[p] = l[c];
                            changed = true;
                        }
                    }
                }
                None => {
                    let r = roots[i];
                    for v in 0..n {
                        if v == r {
                            continue;
                        }
                        let cap = super::candidates::bits(local.adj[v])
                            .map(|w| u[w])
                            .max()
                            .unwrap_or(0)
                            .min(u[r]);
                        if u[v] > cap {
                            u[v] = cap;
                            changed = true;
                        }
                        if l[r] < l[v] {
                            l[r] = l[v];
                            changed = true;
                        }
                    }
                }
            }
        }
        for v in 0..n {
            let (mut su, mut sl) = (0i64, 0i64);
            for i in 0..k {
                su += upper[i * n + v];
                sl += lower[i * n + v];
            }
            if su < f[v] || sl > f[v] {
                return None;
            }
            for i in 0..k {
                let at = i * n + v;
                let cap = f[v] - (sl - lower[at]);
                if upper[at] > cap {
                    su -= upper[at] - cap;
                    upper[at] = cap;
                    changed = true;
                }
                let floor = f[v] - (su - upper[at]);
                if lower[at] < floor {
                    sl += floor - lower[at];
                    lower[at] = floor;
                    changed = true;
                }
            }
        }
        if lower.iter().zip(&upper).any(|(l, u)| l > u) {
            return None;
        }
        if !changed {
            break;
        }
    }
    Some(Bounds { n, upper, lower })
}
