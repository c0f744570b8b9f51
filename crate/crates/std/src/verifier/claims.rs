//! Degree caps for an outside vertex `w` against each component `H` of
//! `G[Z_+]`, for graphs with no cycle carrying three chords at one vertex.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use trebly_core::graph::{
    apex_partition, classify_component, graph6_encode, ComponentKind, VertexSet,
};
use trebly_core::Graph;

/// The caps, one per component shape. Changing one is a mutation run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimBounds {
    /// `d_H(w)` for a star with at least three leaves when `w` sees the centre.
    pub big_star_center: usize,
    /// `d_H(w)` for a double star with at least three leaves.
    pub double_star: usize,
    /// Leaves of that double star seen by `w`.
    pub double_star_leaves: usize,
    /// `d_H(w)` for `K^+_{1,s}`, `s >= 3`.
    pub star_plus: usize,
    /// Pendant vertices of that `K^+_{1,s}` seen by `w`.
    pub star_plus_pendants: usize,
    /// `d_H(w)` for that `K^+_{1,s}` when `w` sees the centre.
    pub star_plus_center: usize,
    pub c4_plus: usize,
    pub k4: usize,
}

impl Default for ClaimBounds {
    fn default() -> ClaimBounds {
        ClaimBounds {
            big_star_center: 2,
            double_star: 3,
            double_star_leaves: 1,
            star_plus: 3,
            star_plus_pendants: 1,
            star_plus_center: 1,
            c4_plus: 2,
            k4: 1,
        }
    }
}

impl ClaimBounds {
    pub const NAMES: [&'static str; 8] = [
        "big_star_center",
        "double_star",
        "double_star_leaves",
        "star_plus",
        "star_plus_pendants",
        "star_plus_center",
        "c4_plus",
        "k4",
    ];

    pub fn get(&self, name: &str) -> Option<usize> {
        Some(match name {
            "big_star_center" => self.big_star_center,
            "double_star" => self.double_star,
            "double_star_leaves" => self.double_star_leaves,
            "star_plus" => self.star_plus,
            "star_plus_pendants" => self.star_plus_pendants,
            "star_plus_center" => self.star_plus_center,
            "c4_plus" => self.c4_plus,
            "k4" => self.k4,
            _ => return None,
        })
    }

    /// Overrides one cap from `name=value`.
    pub fn set(&mut self, spec: &str) -> Result<(), String> {
        let (name, value) = spec
            .split_once('=')
            .ok_or_else(|| format!("expected NAME=VALUE, got `{spec}`"))?;
        let value: usize = value
            .trim()
            .parse()
            .map_err(|_| format!("bad value in `{spec}`"))?;
        let slot = match name.trim() {
            "big_star_center" => &mut self.big_star_center,
            "double_star" => &mut self.double_star,
            "double_star_leaves" => &mut self.double_star_leaves,
            "star_plus" => &mut self.star_plus,
            "star_plus_pendants" => &mut self.star_plus_pendants,
            "star_plus_center" => &mut self.star_plus_center,
            "c4_plus" => &mut self.c4_plus,
            "k4" => &mut self.k4,
            other => return Err(format!("unknown claim bound `{other}`")),
        };
        *slot = value;
        Ok(())
    }
}

/// Violations kept verbatim.
const LISTED: usize = 16;

/// Accumulated outcomes of [`check_claims`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClaimTally {
    pub graphs: u64,
    pub apexes: u64,
    /// How often each rule applied.
    pub checks: BTreeMap<String, u64>,
    /// Largest value seen for each capped quantity.
    pub max_seen: BTreeMap<String, usize>,
    pub uncatalogued: u64,
    pub violations: Vec<String>,
    pub violation_count: u64,
    /// graph6 of the violating graphs, at most one entry per graph.
    pub violating_graphs: Vec<String>,
}

impl ClaimTally {
    fn violation(&mut self, g: &Graph, msg: String) {
        self.violation_count += 1;
        if self.violations.len() < LISTED {
            self.violations.push(format!("{}: {msg}", graph6_encode(g)));
        }
        let code = graph6_encode(g);
        if self.violating_graphs.last() != Some(&code) {
            self.violating_graphs.push(code);
        }
    }

    fn cap(&mut self, g: &Graph, rule: &str, value: usize, cap: usize, at: (usize, usize)) {
        *self.checks.entry(rule.to_string()).or_default() += 1;
        let seen = self.max_seen.entry(rule.to_string()).or_default();
        *seen = (*seen).max(value);
        if value > cap {
            self.violation(
                g,
                format!("z={} w={}: {rule} value {value} exceeds {cap}", at.0, at.1),
            );
        }
    }

    fn rule(&mut self, g: &Graph, rule: &str, holds: bool, at: (usize, usize)) {
        *self.checks.entry(rule.to_string()).or_default() += 1;
        if !holds {
            self.violation(g, format!("z={} w={}: {rule} fails", at.0, at.1));
        }
    }

    /// Caps that no sample reached. A cap above every attained value cannot
    /// be told apart from a looser one.
    pub fn unattained(&self, bounds: &ClaimBounds) -> Vec<String> {
        ClaimBounds::NAMES
            .iter()
            .filter_map(|&name| {
                let cap = bounds.get(name).expect("known name");
                let seen = self.max_seen.get(name).copied();
                (seen != Some(cap)).then(|| format!("{name}: cap {cap}, largest seen {seen:?}"))
            })
            .collect()
    }
}

fn components_within(g: &Graph, s: &VertexSet) -> Vec<VertexSet> {
    let mut left = *s;
    let mut out = Vec::new();
    while let Some(v) = left.first() {
        let c = g.component_of(v, s);
        left = left - c;
        out.push(c);
    }
    out
}

/// Applies every cap and exclusivity rule at every apex `z` of `g`. The
/// caller is responsible for `g` being free of the configuration.
pub fn check_claims(g: &Graph, bounds: &ClaimBounds, tally: &mut ClaimTally) {
    tally.graphs += 1;
    for z in 0..g.n() {
        tally.apexes += 1;
        let p = apex_partition(g, z);
        let comps: Vec<(VertexSet, ComponentKind)> = components_within(g, &p.z_plus)
            .into_iter()
            .map(|c| (c, classify_component(g, &c)))
            .collect();
        for (c, kind) in &comps {
            if *kind == ComponentKind::Other {
                tally.uncatalogued += 1;
                tally.violation(
                    g,
                    format!("z={z}: component {c:?} is outside the catalogue"),
                );
            }
        }
        for w in p.w.iter() {
            let nw = g.neighbors(w);
            let at = (z, w);
            for (i, (c, kind)) in comps.iter().enumerate() {
                let d = (nw & *c).len();
                match *kind {
                    ComponentKind::Star { center, leaves } => {
                        if leaves.len() >= 3 && nw.contains(center) {
                            tally.cap(g, "big_star_center", d, bounds.big_star_center, at);
                        }
                    }
                    ComponentKind::DoubleStar { leaves, .. } => {
                        let all = leaves[0] | leaves[1];
                        if all.len() >= 3 {
                            tally.cap(g, "double_star", d, bounds.double_star, at);
                            let seen = (nw & all).len();
                            tally.cap(g, "double_star_leaves", seen, bounds.double_star_leaves, at);
                        }
                    }
                    ComponentKind::StarPlus {
                        center, pendants, ..
                    } => {
                        if !pendants.is_empty() {
                            tally.cap(g, "star_plus", d, bounds.star_plus, at);
                            let seen = (nw & pendants).len();
                            tally.cap(g, "star_plus_pendants", seen, bounds.star_plus_pendants, at);
                            if nw.contains(center) {
                                tally.cap(g, "star_plus_center", d, bounds.star_plus_center, at);
                            }
                        }
                    }
                    ComponentKind::C4Plus { hubs } => {
                        tally.cap(g, "c4_plus", d, bounds.c4_plus, at);
                        if d == 2 {
                            let avoids_hubs = hubs.iter().all(|&h| !nw.contains(h));
                            tally.rule(g, "c4_plus_rim", avoids_hubs, at);
                        }
                    }
                    ComponentKind::K4 => tally.cap(g, "k4", d, bounds.k4, at),
                    ComponentKind::C4 | ComponentKind::Other => {}
                }

                let is_star = matches!(kind, ComponentKind::Star { .. });
                if is_star || *kind == ComponentKind::Other || d == 0 {
                    continue;
                }
                let elsewhere = comps
                    .iter()
                    .enumerate()
                    .any(|(j, (other, _))| j != i && !(nw & *other).is_empty());
                tally.rule(g, "exclusive_component", !elsewhere, at);
                let blocks_z0 = kind.contains_c4()
                    || matches!(*kind, ComponentKind::StarPlus { center, pendants, .. }
                        if !pendants.is_empty() && !nw.contains(center))
                    || matches!(*kind, ComponentKind::DoubleStar { leaves, .. }
                        if !(nw & (leaves[0] | leaves[1])).is_empty());
                if blocks_z0 {
                    tally.rule(g, "no_isolated_neighbour", (nw & p.z0).is_empty(), at);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use trebly_core::graph::Family;

    #[test]
    fn extremal_graph_passes() {
        for n in 7..=10 {
            let mut t = ClaimTally::default();
            check_claims(
                &Family::K11n2Plus { n }.graph().unwrap(),
                &ClaimBounds::default(),
                &mut t,
            );
            assert_eq!(t.violation_count, 0);
            assert_eq!(t.apexes, n as u64);
        }
    }

    #[test]
    fn pendant_on_a_k4_reaches_the_cap() {
        // z = 0 joined to a K4 on 1..=4, w = 5 adjacent to vertex 1.
        let g = Graph::complete(5)
            .unwrap()
            .disjoint_union(&Graph::complete(1).unwrap())
            .unwrap();
        let g = g.with_edge(1, 5).unwrap();
        let mut t = ClaimTally::default();
        check_claims(&g, &ClaimBounds::default(), &mut t);
        assert_eq!(t.violation_count, 0);
        assert_eq!(t.max_seen["k4"], 1);
        let tight = ClaimBounds {
            k4: 0,
            ..ClaimBounds::default()
        };
        let mut t = ClaimTally::default();
        check_claims(&g, &tight, &mut t);
        assert!(t.violation_count > 0);
    }

    #[test]
    fn bounds_parse() {
        let mut b = ClaimBounds::default();
        b.set("k4=2").unwrap();
        assert_eq!(b.k4, 2);
        assert!(b.set("k5=2").is_err());
        assert!(b.set("k4").is_err());
        assert!(b.set("k4=x").is_err());
    }
}
