//! Named graph families, addressable by strings such as `G12:n=10,s=3`.
//!
//! Vertex labelling conventions (relied upon by the quotient partitions):
//!
//! * `Star{s}`: centre 0, leaves `1..=s`; `StarPlus` adds the edge `1–2`.
//! * `DoubleStar{a, b}`: centres 0 and 1, leaves of 0 then leaves of 1.
//! * `C4Plus`: cycle `0 1 2 3` with diagonal `0–2`.
//! * `K11n2Plus{n}`: universal vertices 0, 1; the adjacent pair 2, 3; the
//!   remaining `n - 4` vertices follow.
//! * `G{i, n}`, `G12`: the labels of `U_i` (apex `z = 0`, `w = 1`) followed by
//!   the `K_4` blocks, each fully joined to `z`.
//! * `G13{n}`: `z = 0`, `w = 1` and 2 form the small side of `K_{3,n-3}`,
//!   with the extra edge `0–2`.
//! * `JoinK1*`: apex 0, then the components in the order they are named.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::fig1::{u12, u_graph};
use super::{Graph, GraphError};

/// The four `K_1 ∨ (small component ∪ k K_4)` families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum JoinPattern {
    /// `K_1 ∨ ((n-1)/4) K_4`, `n ≡ 1 (mod 4)`.
    K4Blocks { n: usize },
    /// `K_1 ∨ (K_1 ∪ ((n-2)/4) K_4)`, `n ≡ 2 (mod 4)`.
    IsolatedAndK4Blocks { n: usize },
    /// `K_1 ∨ (K_{1,1} ∪ ((n-3)/4) K_4)`, `n ≡ 3 (mod 4)`.
    EdgeAndK4Blocks { n: usize },
    /// `K_1 ∨ (K^+_{1,s} ∪ ((n-s-2)/4) K_4)`.
    StarPlusAndK4Blocks { n: usize, s: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Family {
    Complete { n: usize },
    Path { n: usize },
    Cycle { n: usize },
    Star { s: usize },
    StarPlus { s: usize },
    DoubleStar { a: usize, b: usize },
    CompleteMultipartite { parts: Vec<usize> },
    C4Plus,
    K11n2Plus { n: usize },
    U { i: u8 },
    U12 { s: usize },
    G { i: u8, n: usize },
    G12 { n: usize, s: usize },
    G13 { n: usize },
    JoinK1(JoinPattern),
    K1JoinK4UnionK1,
}

/// A constructed family member with its designated apex, when it has one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyGraph {
    pub graph: Graph,
    pub apex: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParameters { family: String, reason: String },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("malformed family parameters `{0}`")]
    Malformed(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn invalid(family: &Family, reason: impl Into<String>) -> FamilyError {
    FamilyError::InvalidParameters {
        family: family.to_string(),
        reason: reason.into(),
    }
}

/// Appends `k` disjoint copies of `K_4` and joins each of their vertices to
/// `hub`.
fn hang_k4_blocks(g: &Graph, hub: usize, k: usize) -> Result<Graph, GraphError> {
    let base = g.n();
    let mut out = g.disjoint_union(&Graph::complete(4)?.copies(k)?)?;
    for v in base..out.n() {
        out.insert_edge(hub, v)?;
    }
    Ok(out)
}

impl Family {
    pub fn build(&self) -> Result<FamilyGraph, FamilyError> {
        let with_apex = |graph: Graph, apex: usize| FamilyGraph {
            graph,
            apex: Some(apex),
        };
        let plain = |graph: Graph| FamilyGraph { graph, apex: None };
        Ok(match *self {
            Family::Complete { n } => plain(Graph::complete(n)?),
            Family::Path { n } => plain(Graph::path(n)?),
            Family::Cycle { n } => {
                if n < 3 {
                    return Err(invalid(self, "a cycle needs n >= 3"));
                }
                plain(Graph::cycle(n)?)
            }
            Family::Star { s } => {
                if s < 1 {
                    return Err(invalid(self, "a star needs s >= 1"));
                }
                with_apex(star(s)?, 0)
            }
            Family::StarPlus { s } => {
                if s < 2 {
                    return Err(invalid(self, "K^+_{1,s} needs s >= 2"));
                }
                with_apex(star(s)?.with_edge(1, 2)?, 0)
            }
            Family::DoubleStar { a, b } => {
                if a < 1 || b < 1 {
                    return Err(invalid(self, "both stars need at least one leaf"));
                }
                let mut edges = alloc::vec![(0, 1)];
                edges.extend((0..a).map(|i| (0, 2 + i)));
                edges.extend((0..b).map(|i| (1, 2 + a + i)));
                plain(Graph::from_edges(a + b + 2, &edges)?)
            }
            Family::CompleteMultipartite { ref parts } => {
                if parts.is_empty() || parts.contains(&0) {
                    return Err(invalid(self, "parts must be non-empty"));
                }
                plain(complete_multipartite(parts)?)
            }
            Family::C4Plus => plain(Graph::cycle(4)?.with_edge(0, 2)?),
            Family::K11n2Plus { n } => {
                if n < 4 {
                    return Err(invalid(self, "needs n >= 4"));
                }
                let g = complete_multipartite(&[1, 1, n - 2])?.with_edge(2, 3)?;
                with_apex(g, 0)
            }
            Family::U { i } => {
                let u = u_graph(i).ok_or_else(|| invalid(self, "index must be in 1..=11"))?;
                with_apex(u.graph()?, 0)
            }
            Family::U12 { s } => {
                if s < 1 {
                    return Err(invalid(self, "needs s >= 1"));
                }
                with_apex(u12(s).graph()?, 0)
            }
            Family::G { i, n } => {
                let u = u_graph(i).ok_or_else(|| invalid(self, "index must be in 1..=11"))?;
                if n < 7 || n < u.order || (n - u.order) % 4 != 0 {
                    return Err(invalid(
                        self,
                        alloc::format!("needs n >= 7 and n ≡ {} (mod 4)", u.order % 4),
                    ));
                }
                with_apex(hang_k4_blocks(&u.graph()?, 0, (n - u.order) / 4)?, 0)
            }
            Family::G12 { n, s } => {
                if s < 3 || n < s + 3 || (n - s - 3) % 4 != 0 {
                    return Err(invalid(
                        self,
                        "needs s >= 3, n >= s + 3 and n - s - 3 ≡ 0 (mod 4)",
                    ));
                }
                with_apex(hang_k4_blocks(&u12(s).graph()?, 0, (n - s - 3) / 4)?, 0)
            }
            Family::G13 { n } => {
                if n < 7 {
                    return Err(invalid(self, "needs n >= 7"));
                }
                let mut edges = alloc::vec![(0, 2)];
                for side in 0..3 {
                    edges.extend((3..n).map(|v| (side, v)));
                }
                with_apex(Graph::from_edges(n, &edges)?, 0)
            }
            Family::JoinK1(pattern) => with_apex(join_pattern(self, pattern)?, 0),
            Family::K1JoinK4UnionK1 => {
                let k1 = Graph::complete(1)?;
                with_apex(k1.join(&Graph::complete(4)?.disjoint_union(&k1)?)?, 0)
            }
        })
    }

    /// Convenience for `build()?.graph`.
    pub fn graph(&self) -> Result<Graph, FamilyError> {
        Ok(self.build()?.graph)
    }
}

fn star(s: usize) -> Result<Graph, GraphError> {
    let edges: Vec<_> = (1..=s).map(|v| (0, v)).collect();
    Graph::from_edges(s + 1, &edges)
}

fn complete_multipartite(parts: &[usize]) -> Result<Graph, GraphError> {
    let n: usize = parts.iter().sum();
    let mut class = Vec::with_capacity(n);
    for (c, &size) in parts.iter().enumerate() {
        class.extend(core::iter::repeat_n(c, size));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if class[u] != class[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

fn join_pattern(family: &Family, pattern: JoinPattern) -> Result<Graph, FamilyError> {
    let k1 = Graph::complete(1)?;
    let (small, rest) = match pattern {
        JoinPattern::K4Blocks { n } => {
            if n < 5 || n % 4 != 1 {
                return Err(invalid(family, "needs n ≡ 1 (mod 4), n >= 5"));
            }
            (Graph::empty(0)?, n - 1)
        }
        JoinPattern::IsolatedAndK4Blocks { n } => {
            if n < 2 || n % 4 != 2 {
                return Err(invalid(family, "needs n ≡ 2 (mod 4)"));
            }
            (Graph::complete(1)?, n - 2)
        }
        JoinPattern::EdgeAndK4Blocks { n } => {
            if n < 3 || n % 4 != 3 {
                return Err(invalid(family, "needs n ≡ 3 (mod 4)"));
            }
            (Graph::complete(2)?, n - 3)
        }
        JoinPattern::StarPlusAndK4Blocks { n, s } => {
            if s < 2 || n < s + 2 || (n - s - 2) % 4 != 0 {
                return Err(invalid(
                    family,
                    "needs s >= 2, n >= s + 2 and n - s - 2 ≡ 0 (mod 4)",
                ));
            }
            (star(s)?.with_edge(1, 2)?, n - s - 2)
        }
    };
    let blocks = Graph::complete(4)?.copies(rest / 4)?;
    Ok(k1.join(&small.disjoint_union(&blocks)?)?)
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete { n } => write!(f, "Complete:n={n}"),
            Family::Path { n } => write!(f, "Path:n={n}"),
            Family::Cycle { n } => write!(f, "Cycle:n={n}"),
            Family::Star { s } => write!(f, "Star:s={s}"),
            Family::StarPlus { s } => write!(f, "StarPlus:s={s}"),
            Family::DoubleStar { a, b } => write!(f, "DoubleStar:a={a},b={b}"),
            Family::CompleteMultipartite { parts } => {
                write!(f, "CompleteMultipartite:parts=")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, "/")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            Family::C4Plus => write!(f, "C4Plus"),
            Family::K11n2Plus { n } => write!(f, "K11n2Plus:n={n}"),
            Family::U { i } => write!(f, "U{i}"),
            Family::U12 { s } => write!(f, "U12:s={s}"),
            Family::G { i, n } => write!(f, "G{i}:n={n}"),
            Family::G12 { n, s } => write!(f, "G12:n={n},s={s}"),
            Family::G13 { n } => write!(f, "G13:n={n}"),
            Family::JoinK1(JoinPattern::K4Blocks { n }) => write!(f, "JoinK1K4:n={n}"),
            Family::JoinK1(JoinPattern::IsolatedAndK4Blocks { n }) => {
                write!(f, "JoinK1K1K4:n={n}")
            }
            Family::JoinK1(JoinPattern::EdgeAndK4Blocks { n }) => write!(f, "JoinK1K2K4:n={n}"),
            Family::JoinK1(JoinPattern::StarPlusAndK4Blocks { n, s }) => {
                write!(f, "JoinK1StarPlusK4:n={n},s={s}")
            }
            Family::K1JoinK4UnionK1 => write!(f, "K1JoinK4UnionK1"),
        }
    }
}

struct Params<'a> {
    source: &'a str,
    pairs: Vec<(&'a str, &'a str)>,
    used: Vec<bool>,
}

impl<'a> Params<'a> {
    fn parse(source: &'a str, text: &'a str) -> Result<Params<'a>, FamilyError> {
        let mut pairs = Vec::new();
        if !text.is_empty() {
            for item in text.split(',') {
                let (k, v) = item
                    .split_once('=')
                    .ok_or_else(|| FamilyError::Malformed(source.to_string()))?;
                let k = k.trim();
                if pairs.iter().any(|&(seen, _)| seen == k) {
                    return Err(FamilyError::Malformed(source.to_string()));
                }
                pairs.push((k, v.trim()));
            }
        }
        let used = alloc::vec![false; pairs.len()];
        Ok(Params {
            source,
            pairs,
            used,
        })
    }

    fn raw(&mut self, key: &str) -> Result<&'a str, FamilyError> {
        let idx = self
            .pairs
            .iter()
            .position(|&(k, _)| k == key)
            .ok_or_else(|| {
                FamilyError::Malformed(alloc::format!("{}: missing `{key}`", self.source))
            })?;
        self.used[idx] = true;
        Ok(self.pairs[idx].1)
    }

    fn int(&mut self, key: &str) -> Result<usize, FamilyError> {
        let raw = self.raw(key)?;
        raw.parse()
            .map_err(|_| FamilyError::Malformed(alloc::format!("{}: `{key}={raw}`", self.source)))
    }

    fn finish(self) -> Result<(), FamilyError> {
        match self.used.iter().position(|u| !u) {
            Some(i) => Err(FamilyError::Malformed(alloc::format!(
                "{}: unknown parameter `{}`",
                self.source,
                self.pairs[i].0
            ))),
            None => Ok(()),
        }
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(text: &str) -> Result<Family, FamilyError> {
        let text = text.trim();
        let (name, params) = text.split_once(':').unwrap_or((text, ""));
        let mut p = Params::parse(text, params)?;
        let family = match name {
            "Complete" => Family::Complete { n: p.int("n")? },
            "Path" => Family::Path { n: p.int("n")? },
            "Cycle" => Family::Cycle { n: p.int("n")? },
            "Star" => Family::Star { s: p.int("s")? },
            "StarPlus" => Family::StarPlus { s: p.int("s")? },
            "DoubleStar" => Family::DoubleStar {
                a: p.int("a")?,
                b: p.int("b")?,
            },
            "CompleteMultipartite" => {
                let raw = p.raw("parts")?;
                let parts = raw
                    .split('/')
                    .map(|x| x.trim().parse::<usize>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| FamilyError::Malformed(text.to_string()))?;
                Family::CompleteMultipartite { parts }
            }
            "C4Plus" => Family::C4Plus,
            "K11n2Plus" => Family::K11n2Plus { n: p.int("n")? },
            "U12" => Family::U12 { s: p.int("s")? },
            "G12" => Family::G12 {
                n: p.int("n")?,
                s: p.int("s")?,
            },
            "G13" => Family::G13 { n: p.int("n")? },
            "JoinK1K4" => Family::JoinK1(JoinPattern::K4Blocks { n: p.int("n")? }),
            "JoinK1K1K4" => Family::JoinK1(JoinPattern::IsolatedAndK4Blocks { n: p.int("n")? }),
            "JoinK1K2K4" => Family::JoinK1(JoinPattern::EdgeAndK4Blocks { n: p.int("n")? }),
            "JoinK1StarPlusK4" => Family::JoinK1(JoinPattern::StarPlusAndK4Blocks {
                n: p.int("n")?,
                s: p.int("s")?,
            }),
            "K1JoinK4UnionK1" => Family::K1JoinK4UnionK1,
            other => {
                let indexed = |prefix: char| -> Option<u8> {
                    let rest = other.strip_prefix(prefix)?;
                    let i: u8 = rest.parse().ok()?;
                    (1..=11).contains(&i).then_some(i)
                };
                if let Some(i) = indexed('U') {
                    Family::U { i }
                } else if let Some(i) = indexed('G') {
                    Family::G { i, n: p.int("n")? }
                } else {
                    return Err(FamilyError::UnknownFamily(other.to_string()));
                }
            }
        };
        p.finish()?;
        Ok(family)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;
    use alloc::vec;

    fn build(name: &str) -> FamilyGraph {
        name.parse::<Family>().unwrap().build().unwrap()
    }

    #[test]
    fn k11n2plus_at_six() {
        let g = build("K11n2Plus:n=6").graph;
        assert_eq!((g.n(), g.edge_count()), (6, 10));
        assert_eq!(g.degree_sequence(), vec![5, 5, 3, 3, 2, 2]);
    }

    #[test]
    fn k11n2plus_is_the_join_construction() {
        for n in 4..12 {
            let k2 = Graph::complete(2).unwrap();
            let rest = k2.disjoint_union(&Graph::empty(n - 4).unwrap()).unwrap();
            let joined = k2.join(&rest).unwrap();
            let fam = Family::K11n2Plus { n }.graph().unwrap();
            assert!(is_isomorphic(&joined, &fam), "n = {n}");
        }
    }

    #[test]
    fn g12_apex_degree_matches_quotient_row() {
        // z row of the quotient is (n-2, s, 1, n-s-3, 0): d(z) = n - 2.
        let fg = build("G12:n=10,s=3");
        assert_eq!(fg.graph.n(), 10);
        assert_eq!(fg.graph.degree(fg.apex.unwrap()), 8);
        assert!(!fg.graph.has_edge(0, 1));
    }

    #[test]
    fn small_named_graphs() {
        assert_eq!(build("StarPlus:s=2").graph, Graph::complete(3).unwrap());
        let c4p = build("C4Plus").graph;
        assert_eq!((c4p.n(), c4p.edge_count()), (4, 5));
        let ds = build("DoubleStar:a=1,b=2").graph;
        assert_eq!(ds.degree_sequence(), vec![3, 2, 1, 1, 1]);
        let k114 = build("CompleteMultipartite:parts=1/1/4").graph;
        assert_eq!(k114.edge_count(), 9);
        let ex6 = build("K1JoinK4UnionK1").graph;
        assert_eq!((ex6.n(), ex6.edge_count()), (6, 11));
    }

    #[test]
    fn g_families_have_apex_degree_n_minus_2() {
        for i in 1..=11u8 {
            let order = u_graph(i).unwrap().order;
            let mut n = order;
            while n < 7 {
                n += 4;
            }
            for n in [n, n + 4, n + 8] {
                let fg = Family::G { i, n }.build().unwrap();
                assert_eq!(fg.graph.n(), n);
                assert_eq!(fg.graph.degree(0), n - 2, "G{i} at n = {n}");
                assert!(!fg.graph.has_isolated_vertex());
            }
            assert!(Family::G { i, n: n + 1 }.build().is_err());
        }
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        assert!(matches!(
            Family::G { i: 1, n: 7 }.build(),
            Err(FamilyError::InvalidParameters { .. })
        ));
        assert!(Family::G { i: 1, n: 6 }.build().is_err());
        assert!(Family::G12 { n: 9, s: 3 }.build().is_err());
        assert!(Family::G12 { n: 10, s: 2 }.build().is_err());
        assert!(Family::JoinK1(JoinPattern::K4Blocks { n: 10 })
            .build()
            .is_err());
        assert!(Family::StarPlus { s: 1 }.build().is_err());
    }

    #[test]
    fn join_patterns_shape() {
        let g = build("JoinK1K4:n=9").graph;
        assert_eq!((g.n(), g.edge_count(), g.degree(0)), (9, 20, 8));
        let g = build("JoinK1K1K4:n=10").graph;
        assert_eq!((g.n(), g.degree(0), g.degree(1)), (10, 9, 1));
        let g = build("JoinK1K2K4:n=7").graph;
        assert_eq!((g.n(), g.edge_count()), (7, 6 + 1 + 6));
        let g = build("JoinK1StarPlusK4:n=8,s=2").graph;
        assert_eq!(g.n(), 8);
        // K_1 ∨ K^+_{1,n-2} is the extremal graph.
        for n in 6..14 {
            let g = Family::JoinK1(JoinPattern::StarPlusAndK4Blocks { n, s: n - 2 })
                .graph()
                .unwrap();
            assert!(is_isomorphic(&g, &Family::K11n2Plus { n }.graph().unwrap()));
        }
    }

    #[test]
    fn g12_endpoint_is_g13() {
        for n in 7..16 {
            let a = Family::G12 { n, s: n - 3 }.graph().unwrap();
            let b = Family::G13 { n }.graph().unwrap();
            assert!(is_isomorphic(&a, &b), "n = {n}");
        }
    }

    #[test]
    fn names_round_trip() {
        for name in [
            "Complete:n=5",
            "G12:n=10,s=3",
            "G3:n=7",
            "U7",
            "U12:s=4",
            "JoinK1StarPlusK4:n=11,s=5",
            "CompleteMultipartite:parts=1/1/4",
            "C4Plus",
        ] {
            assert_eq!(name.parse::<Family>().unwrap().to_string(), name);
        }
        assert!(matches!(
            "Nope:n=3".parse::<Family>(),
            Err(FamilyError::UnknownFamily(_))
        ));
        assert!(matches!(
            "Complete:n=3,m=2".parse::<Family>(),
            Err(FamilyError::Malformed(_))
        ));
        assert!(matches!(
            "Complete".parse::<Family>(),
            Err(FamilyError::Malformed(_))
        ));
        assert!(matches!(
            "G12:n=x,s=3".parse::<Family>(),
            Err(FamilyError::Malformed(_))
        ));
    }
}
