use std::fmt;

use crate::error::{Error, Result};
use crate::model::Problem;
use crate::sets::{touch, touch_both, MsgSet, ServerSet};

/// Largest supported group count; group-index sets are `u32` masks.
pub const MAX_GROUPS: usize = 31;

/// A server grouping `P_1, …, P_m` whose union is its ground set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Grouping {
    groups: Vec<ServerSet>,
    ground: ServerSet,
}

impl Grouping {
    /// Empty groups are dropped; the ground is the union of the groups.
    pub fn new(groups: Vec<ServerSet>) -> Result<Self> {
        let n = match groups.first() {
            Some(g) => g.n(),
            None => return Err(Error::invalid("a grouping needs at least one group")),
        };
        if groups.iter().any(|g| g.n() != n) {
            return Err(Error::invalid("groups are over different message counts"));
        }
        let groups: Vec<ServerSet> = groups.into_iter().filter(|g| !g.is_empty()).collect();
        if groups.is_empty() {
            return Err(Error::invalid("every group of the grouping is empty"));
        }
        if groups.len() > MAX_GROUPS {
            return Err(Error::cap("server groups", groups.len() as u128, MAX_GROUPS as u128));
        }
        let ground = groups.iter().fold(ServerSet::empty(n), |acc, g| acc.union(g));
        Ok(Grouping { groups, ground })
    }

    /// As [`Grouping::new`], additionally requiring the groups to cover exactly `ground`.
    pub fn with_ground(groups: Vec<ServerSet>, ground: &ServerSet) -> Result<Self> {
        let g = Grouping::new(groups)?;
        if &g.ground != ground {
            return Err(Error::invalid(format!("groups cover {} rather than the ground {}", g.ground, ground)));
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.ground.n()
    }

    /// Number of groups `m`.
    pub fn m(&self) -> usize {
        self.groups.len()
    }

    pub fn groups(&self) -> &[ServerSet] {
        &self.groups
    }

    pub fn ground(&self) -> &ServerSet {
        &self.ground
    }

    /// `P_G = ⋃_{g ∈ G} P_g` for a group-index mask (bit `g-1` selects `P_g`).
    pub fn pg(&self, selection: u32) -> ServerSet {
        self.groups
            .iter()
            .enumerate()
            .filter(|(g, _)| selection >> g & 1 == 1)
            .fold(ServerSet::empty(self.n()), |acc, (_, p)| acc.union(p))
    }

    /// `P_G` for every group-index mask, indexed by mask.
    pub fn all_unions(&self) -> Vec<ServerSet> {
        let m = self.m();
        let mut out = vec![ServerSet::empty(self.n()); 1 << m];
        for sel in 1usize..1 << m {
            let low = sel.trailing_zeros() as usize;
            out[sel] = out[sel & (sel - 1)].union(&self.groups[low]);
        }
        out
    }

    /// Each group intersected with `ground`, empty results dropped.
    pub fn restricted_to(&self, ground: &ServerSet) -> Result<Grouping> {
        Grouping::new(self.groups.iter().map(|g| g.intersection(ground)).collect())
    }

    /// Checks that every active server of `problem` is covered.
    pub fn check_valid_for(&self, problem: &Problem) -> Result<()> {
        if self.n() != problem.n() {
            return Err(Error::invalid(format!(
                "grouping is over {} messages, problem has {}",
                self.n(),
                problem.n()
            )));
        }
        let missing = problem.active_servers().difference(&self.ground);
        if !missing.is_empty() {
            return Err(Error::invalid(format!("grouping misses active servers {missing}")));
        }
        Ok(())
    }
}

impl fmt::Display for Grouping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, g) in self.groups.iter().enumerate() {
            if k > 0 {
                f.write_str(" | ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Grouping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `{T_{1} ∩ ground, …, T_{n} ∩ ground}`.
pub fn individual_touch(ground: &ServerSet) -> Result<Grouping> {
    let n = ground.n();
    Grouping::new((1..=n).map(|i| touch(n, MsgSet::singleton(i)).intersection(ground)).collect())
}

/// `{T_{L_1} ∩ ground, …}` for a partition `L_1, …` of `[n]`.
pub fn aggregate_touch(ground: &ServerSet, parts: &[MsgSet]) -> Result<Grouping> {
    let n = ground.n();
    let mut seen = MsgSet::EMPTY;
    for &part in parts {
        if part.is_empty() {
            return Err(Error::invalid("partition parts must be nonempty"));
        }
        if part.intersects(seen) {
            return Err(Error::invalid(format!("partition part {part} overlaps an earlier part")));
        }
        seen |= part;
    }
    if seen != MsgSet::full(n) {
        return Err(Error::invalid(format!("partition covers {seen} rather than [{n}]")));
    }
    Grouping::new(parts.iter().map(|&l| touch(n, l).intersection(ground)).collect())
}

/// The maximal 2-fd grouping `{ground \ T_{K,K'}, ground ∩ T_{K,K'}}`.
pub fn fd2(ground: &ServerSet, k: MsgSet, k2: MsgSet) -> Result<Grouping> {
    fd2_bridges(ground, &[(k, k2)])
}

/// The 2-fd grouping whose second group is the union of the bridges `T_{K,K'}`
/// of all listed pairs.
pub fn fd2_bridges(ground: &ServerSet, pairs: &[(MsgSet, MsgSet)]) -> Result<Grouping> {
    let n = ground.n();
    if pairs.is_empty() {
        return Err(Error::invalid("fd2 needs at least one pair"));
    }
    let mut bridge = ServerSet::empty(n);
    for &(k, k2) in pairs {
        if k.is_empty() || k2.is_empty() || k.intersects(k2) || !(k | k2).is_subset(MsgSet::full(n)) {
            return Err(Error::invalid(format!(
                "fd2 needs disjoint nonempty message sets in [{n}], got {k} and {k2}"
            )));
        }
        bridge = bridge.union(&touch_both(n, k, k2));
    }
    let bridge = bridge.intersection(ground);
    Grouping::new(vec![ground.difference(&bridge), bridge])
}

/// An m-fd grouping from explicit disjoint parts covering `ground`.
pub fn m_fd(ground: &ServerSet, parts: Vec<ServerSet>) -> Result<Grouping> {
    let n = ground.n();
    let mut seen = ServerSet::empty(n);
    for p in &parts {
        if p.n() != n {
            return Err(Error::invalid("parts are over a different message count"));
        }
        if !p.is_disjoint(&seen) {
            return Err(Error::invalid(format!("part {p} overlaps an earlier part")));
        }
        seen = seen.union(p);
    }
    Grouping::with_ground(parts, ground)
}

/// One group per server of `ground`.
pub fn single_server(ground: &ServerSet) -> Result<Grouping> {
    Grouping::new(ground.iter().map(|j| ServerSet::from_servers(ground.n(), [j])).collect())
}

/// The single group `ground`.
pub fn all_server(ground: &ServerSet) -> Result<Grouping> {
    Grouping::new(vec![ground.clone()])
}

/// Whether every group of `coarse` is a union of groups of `fine`.
pub fn is_refinement(fine: &Grouping, coarse: &Grouping) -> Result<bool> {
    if fine.ground != coarse.ground {
        return Err(Error::invalid("refinement test needs groupings over the same ground"));
    }
    Ok(coarse.groups.iter().all(|q| {
        let covered = fine
            .groups
            .iter()
            .filter(|p| p.is_subset(q))
            .fold(ServerSet::empty(q.n()), |acc, p| acc.union(p));
        &covered == q
    }))
}

/// `{P ∩ Q}` over all pairs, empty and repeated groups dropped.
pub fn intersect(a: &Grouping, b: &Grouping) -> Result<Grouping> {
    if a.ground != b.ground {
        return Err(Error::invalid("intersection needs groupings over the same ground"));
    }
    let mut groups: Vec<ServerSet> = Vec::new();
    for p in &a.groups {
        for q in &b.groups {
            let g = p.intersection(q);
            if !g.is_empty() && !groups.contains(&g) {
                groups.push(g);
            }
        }
    }
    Grouping::new(groups)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(items: &[usize]) -> MsgSet {
        MsgSet::of(items)
    }

    fn servers(n: usize, list: &[&[usize]]) -> ServerSet {
        ServerSet::from_servers(n, list.iter().map(|l| s(l)))
    }

    #[test]
    fn pg_of_touch_grouping() {
        let t = individual_touch(&ServerSet::all(4)).unwrap();
        assert_eq!(t.m(), 4);
        assert_eq!(t.pg(0b11), touch(4, s(&[1, 2])));
        assert!(t.pg(0).is_empty());
        assert_eq!(t.pg(0b1111), ServerSet::all(4));
        let unions = t.all_unions();
        for sel in 0..16u32 {
            assert_eq!(unions[sel as usize], t.pg(sel));
        }
    }

    #[test]
    fn fd2_bridge_group() {
        let g = fd2(&ServerSet::all(4), s(&[1]), s(&[4])).unwrap();
        assert_eq!(g.groups()[1], servers(4, &[&[1, 4], &[1, 2, 4], &[1, 3, 4], &[1, 2, 3, 4]]));
        assert_eq!(g.ground(), &ServerSet::all(4));
        assert!(fd2(&ServerSet::all(4), s(&[1]), s(&[1, 2])).is_err());
        assert!(fd2(&ServerSet::all(4), MsgSet::EMPTY, s(&[2])).is_err());
    }

    #[test]
    fn refinement_relations() {
        let all = ServerSet::all(3);
        let t = individual_touch(&all).unwrap();
        let a = aggregate_touch(&all, &[s(&[1]), s(&[2, 3])]).unwrap();
        let b = aggregate_touch(&all, &[s(&[1, 2]), s(&[3])]).unwrap();
        assert!(is_refinement(&t, &a).unwrap());
        assert!(is_refinement(&t, &b).unwrap());
        assert!(!is_refinement(&a, &b).unwrap());
        let single = single_server(&all).unwrap();
        for g in [&t, &a, &b, &all_server(&all).unwrap()] {
            assert!(is_refinement(&single, g).unwrap());
            assert!(is_refinement(g, &all_server(&all).unwrap()).unwrap());
        }
        let meet = intersect(&a, &b).unwrap();
        assert!(is_refinement(&meet, &a).unwrap() && is_refinement(&meet, &b).unwrap());
    }

    #[test]
    fn intersect_with_itself_is_identity_for_partitions() {
        let all = ServerSet::all(4);
        let g = fd2(&all, s(&[1, 2]), s(&[3])).unwrap();
        assert_eq!(intersect(&g, &g).unwrap(), g);
    }

    #[test]
    fn invalid_inputs() {
        let all = ServerSet::all(3);
        assert!(aggregate_touch(&all, &[s(&[1]), s(&[1, 2]), s(&[3])]).is_err());
        assert!(aggregate_touch(&all, &[s(&[1]), s(&[2])]).is_err());
        assert!(Grouping::new(vec![]).is_err());
        assert!(Grouping::with_ground(vec![servers(3, &[&[1]])], &all).is_err());
        assert!(m_fd(&all, vec![touch(3, s(&[1])), touch(3, s(&[2]))]).is_err());
        let other = ServerSet::from_servers(3, [s(&[1])]);
        assert!(intersect(&all_server(&all).unwrap(), &all_server(&other).unwrap()).is_err());
    }

    #[test]
    fn empty_groups_are_dropped() {
        let na = servers(3, &[&[1, 2], &[2]]);
        let t = individual_touch(&na).unwrap();
        assert_eq!(t.m(), 2);
        assert_eq!(t.ground(), &na);
    }
}
