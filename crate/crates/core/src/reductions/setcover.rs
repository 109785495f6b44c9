use std::collections::BTreeSet;

use num_traits::One;

use super::{min_cover, BRUTE_FORCE_LIMIT};
use crate::{
    rational, validate_decomposition, Decomposition, DensityGraph, Error, MonotoneTree, Rational,
    Result, Variant,
};

/// Sets over the universe `0..universe_size`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetCoverInstance {
    pub universe_size: usize,
    pub sets: Vec<BTreeSet<usize>>,
}

impl SetCoverInstance {
    pub fn new(universe_size: usize, sets: Vec<BTreeSet<usize>>) -> Result<Self> {
        if let Some(&e) = sets.iter().flatten().find(|&&e| e >= universe_size) {
            return Err(Error::InvalidInstance(format!(
                "element {e} outside universe of size {universe_size}"
            )));
        }
        Ok(SetCoverInstance {
            universe_size,
            sets,
        })
    }

    /// No two sets share more than one element.
    pub fn is_sc1(&self) -> bool {
        self.sets.iter().enumerate().all(|(i, a)| {
            self.sets[..i]
                .iter()
                .all(|b| a.intersection(b).count() <= 1)
        })
    }

    pub fn is_cover(&self, cover: &[usize]) -> bool {
        let mut covered = vec![false; self.universe_size];
        for &i in cover {
            match self.sets.get(i) {
                Some(set) => set.iter().for_each(|&e| covered[e] = true),
                None => return false,
            }
        }
        covered.into_iter().all(|c| c)
    }

    /// Gadget vertex of set `i`.
    pub fn set_vertex(&self, i: usize) -> usize {
        i
    }

    /// Gadget vertex of element `e`.
    pub fn element_vertex(&self, e: usize) -> usize {
        self.sets.len() + e
    }
}

/// Bipartite gadget: set vertices `0..m` with density `|S_i|`, element
/// vertices `m..m+n` with density 1, and an edge for every membership.
pub fn sc1_to_density_graph(sc: &SetCoverInstance) -> Result<DensityGraph> {
    if !sc.is_sc1() {
        return Err(Error::InvalidInstance(
            "two sets share more than one element".into(),
        ));
    }
    let m = sc.sets.len();
    let mut densities: Vec<Rational> = sc.sets.iter().map(|s| rational(s.len() as i64)).collect();
    densities.extend((0..sc.universe_size).map(|_| Rational::one()));
    let edges = sc
        .sets
        .iter()
        .enumerate()
        .flat_map(|(i, s)| s.iter().map(move |&e| (i, m + e)));
    DensityGraph::new(densities, edges)
}

/// One tree per cover set, rooted at the set's vertex.
///
/// Each element hangs below the first cover set containing it (in the order
/// given), and every set outside the cover collects one unit from each of its
/// elements through those trees. With `complete`, an element contained in
/// `c` cover sets instead appears in all of their trees with value `1/c`,
/// which covers every edge of the gadget and yields a CM-tree set.
pub fn mtree_set_from_cover(
    sc: &SetCoverInstance,
    cover: &[usize],
    complete: bool,
) -> Result<Decomposition> {
    let g = sc1_to_density_graph(sc)?;
    if !sc.is_cover(cover) {
        return Err(Error::InvalidInstance("not a set cover".into()));
    }
    let cover: Vec<usize> = {
        let mut c = cover.to_vec();
        c.sort_unstable();
        c.dedup();
        c
    };
    if let Some(&i) = cover.iter().find(|&&i| sc.sets[i].is_empty()) {
        return Err(Error::InvalidInstance(format!("cover uses empty set {i}")));
    }
    let in_cover: BTreeSet<usize> = cover.iter().copied().collect();
    let holders = |e: usize| -> Vec<usize> {
        cover
            .iter()
            .copied()
            .filter(|&i| sc.sets[i].contains(&e))
            .collect()
    };
    let mut trees = Vec::with_capacity(cover.len());
    for &i in &cover {
        let root = sc.set_vertex(i);
        let mut values = vec![(root, rational(sc.sets[i].len() as i64))];
        let mut edges = Vec::new();
        for &e in &sc.sets[i] {
            let owners = holders(e);
            let share = if complete {
                Rational::new(1.into(), (owners.len() as i64).into())
            } else if owners[0] == i {
                Rational::one()
            } else {
                continue;
            };
            let b = sc.element_vertex(e);
            values.push((b, share.clone()));
            edges.push((root, b));
            for (l, set) in sc.sets.iter().enumerate() {
                if !in_cover.contains(&l) && set.contains(&e) {
                    values.push((sc.set_vertex(l), share.clone()));
                    edges.push((b, sc.set_vertex(l)));
                }
            }
        }
        trees.push(MonotoneTree::new(root, values, edges));
    }
    let variant = if complete { Variant::CM } else { Variant::M };
    let d = Decomposition::new(variant, trees);
    debug_assert!(validate_decomposition(&g, &d).unwrap().ok());
    Ok(d)
}

/// Set cover of size at most `d.len()` read off an M-tree set of the gadget:
/// set roots contribute their own set, element roots the first set
/// containing the element unless it is already covered.
pub fn cover_from_mtree_set(sc: &SetCoverInstance, d: &Decomposition) -> Result<Vec<usize>> {
    let g = sc1_to_density_graph(sc)?;
    let report = validate_decomposition(&g, &d.clone().relabel(Variant::M))?;
    if let Some(v) = report.violations.first() {
        return Err(Error::InvalidDecomposition(v.to_string()));
    }
    let m = sc.sets.len();
    let mut roots: Vec<usize> = d.trees.iter().map(|t| t.root).collect();
    roots.sort_unstable();
    let mut cover = BTreeSet::new();
    let mut covered = vec![false; sc.universe_size];
    for &r in roots.iter().filter(|&&r| r < m) {
        cover.insert(r);
        sc.sets[r].iter().for_each(|&e| covered[e] = true);
    }
    for &r in roots.iter().filter(|&&r| r >= m) {
        let e = r - m;
        if covered[e] {
            continue;
        }
        let i = (0..m)
            .find(|&i| sc.sets[i].contains(&e))
            .ok_or_else(|| Error::InvalidInstance(format!("element {e} is in no set")))?;
        cover.insert(i);
        sc.sets[i].iter().for_each(|&x| covered[x] = true);
    }
    if let Some(e) = covered.iter().position(|&c| !c) {
        return Err(Error::InvalidDecomposition(format!(
            "extracted sets leave element {e} uncovered"
        )));
    }
    Ok(cover.into_iter().collect())
}

/// Minimum set cover size by enumerating subsets in increasing size.
pub fn brute_force_set_cover(sc: &SetCoverInstance) -> Result<usize> {
    if sc.sets.len() > BRUTE_FORCE_LIMIT || sc.universe_size > 64 {
        return Err(Error::TooLarge(format!("{} sets", sc.sets.len())));
    }
    let masks: Vec<u64> = sc
        .sets
        .iter()
        .map(|s| s.iter().fold(0u64, |acc, &e| acc | 1 << e))
        .collect();
    let target = if sc.universe_size == 64 {
        u64::MAX
    } else {
        (1u64 << sc.universe_size) - 1
    };
    min_cover(&masks, target)
        .ok_or_else(|| Error::InvalidInstance("the sets do not cover the universe".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sc(n: usize, sets: &[&[usize]]) -> SetCoverInstance {
        SetCoverInstance::new(n, sets.iter().map(|s| s.iter().copied().collect()).collect())
            .unwrap()
    }

    #[test]
    fn two_set_gadget() {
        let inst = sc(3, &[&[0, 1], &[1, 2]]);
        let g = sc1_to_density_graph(&inst).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.density(0), &rational(2));
        assert_eq!(g.density(3), &rational(1));
        assert_eq!(brute_force_set_cover(&inst).unwrap(), 2);

        let d = mtree_set_from_cover(&inst, &[0, 1], false).unwrap();
        assert_eq!(d.len(), 2);
        assert!(validate_decomposition(&g, &d).unwrap().ok());
        let cm = mtree_set_from_cover(&inst, &[0, 1], true).unwrap();
        assert!(validate_decomposition(&g, &cm).unwrap().ok());
        assert_eq!(cover_from_mtree_set(&inst, &d).unwrap(), vec![0, 1]);
    }

    #[test]
    fn star_instance() {
        let inst = sc(3, &[&[0, 1, 2]]);
        assert_eq!(brute_force_set_cover(&inst).unwrap(), 1);
        let g = sc1_to_density_graph(&inst).unwrap();
        let d = mtree_set_from_cover(&inst, &[0], false).unwrap();
        assert_eq!(d.len(), 1);
        assert!(validate_decomposition(&g, &d.clone().relabel(Variant::FM)).unwrap().ok());
        assert_eq!(cover_from_mtree_set(&inst, &d).unwrap(), vec![0]);
    }

    #[test]
    fn non_cover_sets_are_collected() {
        // Set 2 = {0, 2} is covered pointwise by sets 0 and 1.
        let inst = sc(4, &[&[0, 1], &[2, 3], &[0, 2]]);
        let g = sc1_to_density_graph(&inst).unwrap();
        for complete in [false, true] {
            let d = mtree_set_from_cover(&inst, &[0, 1], complete).unwrap();
            assert!(validate_decomposition(&g, &d).unwrap().ok());
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(sc1_to_density_graph(&sc(3, &[&[0, 1, 2], &[0, 1]])).is_err());
        let inst = sc(3, &[&[0, 1], &[1, 2]]);
        assert!(mtree_set_from_cover(&inst, &[0], false).is_err());
        assert!(brute_force_set_cover(&sc(2, &[&[0]])).is_err());
        assert!(SetCoverInstance::new(1, vec![BTreeSet::from([4])]).is_err());
    }
}
