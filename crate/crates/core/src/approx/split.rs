use num_traits::Signed;

use crate::sweep::{mode_forced_in, sweep_in_place};
use crate::{components, is_forest, DensityGraph, Error, Rational, Result};

/// How far sweeping from one side of a split tree gets before every
/// mode-forced vertex lies on the other side.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SweepReport {
    /// Number of sweeps performed.
    pub sweep_count: usize,
    /// Density left at the junction vertex afterwards.
    pub residual_at_junction: Rational,
}

/// Sweeps from mode-forced vertices outside `t2` (smallest id first) until
/// all mode-forced vertices of the remainder lie in `t2`.
///
/// `t1` and `t2` are vertex sets of connected subtrees of the tree `t` that
/// together cover `t` and share exactly one vertex, the junction.
pub fn split_sweep(t: &DensityGraph, t1: &[usize], t2: &[usize]) -> Result<SweepReport> {
    let n = t.vertex_count();
    if !is_forest(t) || components(t).len() != 1 {
        return Err(Error::InvalidSplit("host is not a tree".into()));
    }
    let mut in1 = vec![false; n];
    let mut in2 = vec![false; n];
    for (side, set) in [(&mut in1, t1), (&mut in2, t2)] {
        for &v in set {
            t.check_vertex(v)?;
            side[v] = true;
        }
    }
    let shared: Vec<usize> = (0..n).filter(|&v| in1[v] && in2[v]).collect();
    let junction = match shared.as_slice() {
        [v] => *v,
        _ => {
            return Err(Error::InvalidSplit(format!(
                "subtrees share {} vertices, expected one",
                shared.len()
            )))
        }
    };
    if let Some(v) = (0..n).find(|&v| !in1[v] && !in2[v]) {
        return Err(Error::InvalidSplit(format!("vertex {v} is in neither subtree")));
    }
    for (name, side) in [("first", &in1), ("second", &in2)] {
        if !connected_within(t, side) {
            return Err(Error::InvalidSplit(format!("{name} subtree is disconnected")));
        }
    }

    let mut f = t.densities().to_vec();
    let mut sweep_count = 0;
    while let Some(u) = mode_forced_in(t, &f).into_iter().find(|&u| !in2[u]) {
        debug_assert!(f[u].is_positive());
        let alpha = f[u].clone();
        sweep_in_place(t, &mut f, u, alpha);
        sweep_count += 1;
    }
    Ok(SweepReport {
        sweep_count,
        residual_at_junction: f[junction].clone(),
    })
}

fn connected_within(t: &DensityGraph, member: &[bool]) -> bool {
    let Some(start) = member.iter().position(|&m| m) else {
        return false;
    };
    let mut seen = vec![false; member.len()];
    seen[start] = true;
    let mut stack = vec![start];
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &w in t.neighbors(u) {
            if member[w] && !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == member.iter().filter(|&&m| m).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational;

    fn path(values: &[i64]) -> DensityGraph {
        DensityGraph::new(
            values.iter().map(|&v| rational(v)).collect(),
            (1..values.len()).map(|i| (i - 1, i)),
        )
        .unwrap()
    }

    #[test]
    fn sweeps_from_first_side() {
        let r = split_sweep(&path(&[3, 1, 2]), &[0, 1], &[1, 2]).unwrap();
        assert_eq!(r.sweep_count, 1);
        assert_eq!(r.residual_at_junction, rational(0));
    }

    #[test]
    fn nothing_to_sweep_when_mode_is_on_junction() {
        let r = split_sweep(&path(&[2, 3, 2]), &[0, 1], &[1, 2]).unwrap();
        assert_eq!(r.sweep_count, 0);
        assert_eq!(r.residual_at_junction, rational(3));
    }

    #[test]
    fn zero_first_side() {
        let r = split_sweep(&path(&[0, 4, 1]), &[0, 1], &[1, 2]).unwrap();
        assert_eq!(
            r,
            SweepReport {
                sweep_count: 0,
                residual_at_junction: rational(4)
            }
        );
    }

    #[test]
    fn rejects_bad_splits() {
        let g = path(&[1, 1, 1]);
        assert!(split_sweep(&g, &[0, 1, 2], &[1, 2]).is_err());
        assert!(split_sweep(&g, &[0], &[2]).is_err());
        assert!(split_sweep(&g, &[0, 2], &[2, 1]).is_err());
    }
}
