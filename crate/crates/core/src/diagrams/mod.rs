//! Generalized chord diagrams: directed circles carrying a finite set of
//! sites, partitioned into cyclically ordered parts of size at least two.
//!
//! Gluing an n-prong to each part gives the cyclic graph `Γ(D)` (one vertex
//! per part, one edge per circle arc) and its ribbon surface `Σ(D)`. The
//! boundary of `Σ(D)` other than the input circles is traced by the
//! reconnection rule "an arc arriving at site `f` continues along the arc
//! departing from the successor of `f` in its part".

mod io;
mod presets;

pub use io::{DiagramSpec, PartSpec, SiteLabel};
pub use presets::DiagramPreset;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("invalid part {index}: parts need at least two sites, found {size}")]
    InvalidPart { index: usize, size: usize },
    #[error("invalid partition: site {0:?} is not in any part")]
    Uncovered(String),
    #[error("invalid partition: site {0:?} appears more than once")]
    Duplicated(String),
    #[error("invalid partition: site {0:?} is not on any circle")]
    UnknownSite(String),
    #[error("invalid part {0}: its cyclic order is not a permutation of its sites")]
    BadOrder(usize),
    #[error("invalid multiplicity for site {0:?}")]
    BadMultiplicity(String),
    #[error("diagram preset {0} needs n ≥ 2")]
    ArityTooSmall(&'static str),
    #[error("unknown diagram preset {0:?} (expected I..VII)")]
    UnknownPreset(String),
    #[error("malformed diagram file: {0}")]
    Json(String),
}

/// An arc of a circle: from the `index`-th site to the next one. A circle
/// without sites has the single arc `index = 0`, a free loop.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ArcId {
    pub circle: usize,
    pub index: usize,
}

#[derive(Clone, Debug)]
pub struct ChordDiagram {
    labels: Vec<String>,
    /// Sites of each circle in traversal order.
    circles: Vec<Vec<usize>>,
    /// Sites of each part in cyclic order.
    parts: Vec<Vec<usize>>,
    part_of: Vec<usize>,
    /// Successor of each site in its part.
    succ: Vec<usize>,
    location: Vec<(usize, usize)>,
    /// Higher-order annotation; carries no surgery semantics.
    multiplicities: BTreeMap<usize, u32>,
}

/// Half-edge around a vertex of `Γ(D)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HalfEdge {
    Arriving(ArcId),
    Departing(ArcId),
}

/// The cyclic graph `Γ(D)`.
#[derive(Clone, Debug)]
pub struct RibbonGraph {
    /// Per vertex (part), the half-edges in ribbon order.
    pub rotations: Vec<Vec<HalfEdge>>,
    /// Per edge (arc), its endpoint vertices; `None` for free loops.
    pub edges: Vec<(ArcId, Option<(usize, usize)>)>,
}

impl RibbonGraph {
    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// `V − E`, with free loops counted as circles (`χ = 0`).
    pub fn euler_char(&self) -> i64 {
        let attached = self.edges.iter().filter(|(_, ends)| ends.is_some()).count();
        self.vertex_count() as i64 - attached as i64
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurgeryResult {
    pub outputs: Vec<Vec<ArcId>>,
    pub genus: u64,
    pub euler_char: i64,
    pub input_count: usize,
    pub output_count: usize,
    pub components: usize,
}

impl ChordDiagram {
    /// Builds a diagram from labelled circles and parts (each part listed in
    /// its cyclic order).
    pub fn new(circles: Vec<Vec<String>>, parts: Vec<Vec<String>>) -> Result<Self, DiagramError> {
        Self::with_multiplicities(circles, parts, BTreeMap::new())
    }

    pub fn with_multiplicities(
        circles: Vec<Vec<String>>,
        parts: Vec<Vec<String>>,
        multiplicities: BTreeMap<String, u32>,
    ) -> Result<Self, DiagramError> {
        let mut labels = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut location = Vec::new();
        let circles: Vec<Vec<usize>> = circles
            .into_iter()
            .enumerate()
            .map(|(c, sites)| {
                sites
                    .into_iter()
                    .enumerate()
                    .map(|(k, label)| {
                        if index.contains_key(&label) {
                            return Err(DiagramError::Duplicated(label));
                        }
                        index.insert(label.clone(), labels.len());
                        labels.push(label);
                        location.push((c, k));
                        Ok(labels.len() - 1)
                    })
                    .collect()
            })
            .collect::<Result<_, _>>()?;

        let n = labels.len();
        let mut part_of = vec![usize::MAX; n];
        let mut succ = vec![usize::MAX; n];
        let mut part_sites = Vec::with_capacity(parts.len());
        for (p, part) in parts.into_iter().enumerate() {
            if part.len() < 2 {
                return Err(DiagramError::InvalidPart { index: p, size: part.len() });
            }
            let sites: Vec<usize> = part
                .into_iter()
                .map(|label| index.get(&label).copied().ok_or(DiagramError::UnknownSite(label)))
                .collect::<Result<_, _>>()?;
            for &s in &sites {
                if part_of[s] != usize::MAX {
                    return Err(DiagramError::Duplicated(labels[s].clone()));
                }
                part_of[s] = p;
            }
            for (k, &s) in sites.iter().enumerate() {
                succ[s] = sites[(k + 1) % sites.len()];
            }
            part_sites.push(sites);
        }
        if let Some(s) = part_of.iter().position(|&p| p == usize::MAX) {
            return Err(DiagramError::Uncovered(labels[s].clone()));
        }
        let multiplicities = multiplicities
            .into_iter()
            .map(|(label, m)| match index.get(&label) {
                Some(&s) if m >= 1 => Ok((s, m)),
                _ => Err(DiagramError::BadMultiplicity(label)),
            })
            .collect::<Result<_, _>>()?;
        Ok(ChordDiagram { labels, circles, parts: part_sites, part_of, succ, location, multiplicities })
    }

    pub fn circle_count(&self) -> usize {
        self.circles.len()
    }

    pub fn site_count(&self) -> usize {
        self.labels.len()
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    pub fn label(&self, site: usize) -> &str {
        &self.labels[site]
    }

    pub fn circles(&self) -> impl Iterator<Item = Vec<&str>> + '_ {
        self.circles.iter().map(|c| c.iter().map(|&s| self.label(s)).collect())
    }

    pub fn parts(&self) -> impl Iterator<Item = Vec<&str>> + '_ {
        self.parts.iter().map(|p| p.iter().map(|&s| self.label(s)).collect())
    }

    pub fn multiplicity(&self, site: usize) -> u32 {
        self.multiplicities.get(&site).copied().unwrap_or(1)
    }

    pub fn arcs(&self) -> Vec<ArcId> {
        self.circles
            .iter()
            .enumerate()
            .flat_map(|(circle, sites)| (0..sites.len().max(1)).map(move |index| ArcId { circle, index }))
            .collect()
    }

    /// Site an arc departs from, `None` for a free loop.
    pub fn arc_source(&self, arc: ArcId) -> Option<usize> {
        self.circles[arc.circle].get(arc.index).copied()
    }

    /// Site an arc arrives at, `None` for a free loop.
    pub fn arc_target(&self, arc: ArcId) -> Option<usize> {
        let sites = &self.circles[arc.circle];
        (!sites.is_empty()).then(|| sites[(arc.index + 1) % sites.len()])
    }

    fn departing(&self, site: usize) -> ArcId {
        let (circle, index) = self.location[site];
        ArcId { circle, index }
    }

    fn arriving(&self, site: usize) -> ArcId {
        let (circle, index) = self.location[site];
        let len = self.circles[circle].len();
        ArcId { circle, index: (index + len - 1) % len }
    }

    /// Continuation of an arc under the reconnection rule.
    pub fn next_arc(&self, arc: ArcId) -> ArcId {
        match self.arc_target(arc) {
            Some(f) => self.departing(self.succ[f]),
            None => arc,
        }
    }

    pub fn gamma_graph(&self) -> RibbonGraph {
        let rotations = self
            .parts
            .iter()
            .map(|sites| {
                sites
                    .iter()
                    .flat_map(|&f| [HalfEdge::Arriving(self.arriving(f)), HalfEdge::Departing(self.departing(f))])
                    .collect()
            })
            .collect();
        let edges = self
            .arcs()
            .into_iter()
            .map(|a| {
                let ends = self.arc_source(a).zip(self.arc_target(a)).map(|(s, t)| (self.part_of[s], self.part_of[t]));
                (a, ends)
            })
            .collect();
        RibbonGraph { rotations, edges }
    }

    /// Connected components of `Γ(D)` (equivalently of `Σ(D)`).
    pub fn component_count(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.circles.len()).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            parent[x] = r;
            r
        }
        for sites in &self.parts {
            let first = self.location[sites[0]].0;
            for &s in &sites[1..] {
                let (a, b) = (find(&mut parent, first), find(&mut parent, self.location[s].0));
                parent[a] = b;
            }
        }
        (0..self.circles.len()).filter(|&c| find(&mut parent, c) == c).count()
    }

    pub fn surgery_outputs(&self) -> SurgeryResult {
        let arcs = self.arcs();
        let slot: HashMap<ArcId, usize> = arcs.iter().enumerate().map(|(k, &a)| (a, k)).collect();
        let mut seen = vec![false; arcs.len()];
        let mut outputs = Vec::new();
        for (k, &start) in arcs.iter().enumerate() {
            if seen[k] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut a = start;
            while !seen[slot[&a]] {
                seen[slot[&a]] = true;
                cycle.push(a);
                a = self.next_arc(a);
            }
            outputs.push(cycle);
        }
        let euler_char = self.gamma_graph().euler_char();
        let components = self.component_count();
        let input_count = self.circles.len();
        let output_count = outputs.len();
        let twice_genus = 2 * components as i64 - euler_char - (input_count + output_count) as i64;
        debug_assert!(twice_genus >= 0 && twice_genus % 2 == 0);
        SurgeryResult { outputs, genus: (twice_genus / 2) as u64, euler_char, input_count, output_count, components }
    }

    /// `|F| − Σ_P (|P| − 1)·d`.
    pub fn operator_degree(&self, dimension: i64) -> i64 {
        let constraints: i64 = self.parts.iter().map(|p| p.len() as i64 - 1).sum();
        self.site_count() as i64 - constraints * dimension
    }

    /// The diagram with inputs and outputs exchanged. Its circles are the
    /// outputs of `self`, each passing the site where an arc of the output
    /// arrives; each part keeps its sites with the cyclic order reversed.
    pub fn dual(&self) -> ChordDiagram {
        let circles = self
            .surgery_outputs()
            .outputs
            .iter()
            .map(|cycle| cycle.iter().filter_map(|&a| self.arc_target(a)).map(|s| self.labels[s].clone()).collect())
            .collect();
        let parts =
            self.parts.iter().map(|sites| sites.iter().rev().map(|&s| self.labels[s].clone()).collect()).collect();
        let multiplicities = self.multiplicities.iter().map(|(&s, &m)| (self.labels[s].clone(), m)).collect();
        ChordDiagram::with_multiplicities(circles, parts, multiplicities).expect("dual of a valid diagram is valid")
    }

    /// Disjoint union; labels are prefixed with `l.` and `r.`.
    pub fn disjoint_union(&self, other: &ChordDiagram) -> ChordDiagram {
        let prefixed = |d: &ChordDiagram, pre: &str| -> (Vec<Vec<String>>, Vec<Vec<String>>) {
            let circles = d.circles().map(|c| c.iter().map(|l| format!("{pre}{l}")).collect()).collect();
            let parts = d.parts().map(|p| p.iter().map(|l| format!("{pre}{l}")).collect()).collect();
            (circles, parts)
        };
        let (mut circles, mut parts) = prefixed(self, "l.");
        let (c2, p2) = prefixed(other, "r.");
        circles.extend(c2);
        parts.extend(p2);
        ChordDiagram::new(circles, parts).expect("union of valid diagrams is valid")
    }

    /// Label-preserving normal form: each circle and part rotated to start
    /// at its least label, then circles and parts sorted.
    pub fn normal_form(&self) -> (Vec<Vec<String>>, Vec<Vec<String>>) {
        fn rotate_min(v: Vec<&str>) -> Vec<String> {
            let k = (0..v.len()).min_by_key(|&k| v[k]).unwrap_or(0);
            v[k..].iter().chain(&v[..k]).map(|s| s.to_string()).collect()
        }
        let mut circles: Vec<_> = self.circles().map(rotate_min).collect();
        let mut parts: Vec<_> = self.parts().map(rotate_min).collect();
        circles.sort();
        parts.sort();
        (circles, parts)
    }

    pub fn is_isomorphic(&self, other: &ChordDiagram) -> bool {
        self.normal_form() == other.normal_form()
    }

    /// Human-readable arc name, `label→label` or `○` for a free loop.
    pub fn arc_name(&self, arc: ArcId) -> String {
        match self.arc_source(arc).zip(self.arc_target(arc)) {
            Some((s, t)) => format!("{}→{}", self.labels[s], self.labels[t]),
            None => format!("○{}", arc.circle),
        }
    }
}

impl fmt::Display for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let circles: Vec<String> = self.circles().map(|c| format!("({})", c.join(" "))).collect();
        let parts: Vec<String> = self.parts().map(|p| format!("<{}>", p.join(" "))).collect();
        write!(f, "circles {} parts {}", circles.join(" "), parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diagram(circles: &[&[&str]], parts: &[&[&str]]) -> Result<ChordDiagram, DiagramError> {
        let owned = |v: &[&[&str]]| v.iter().map(|c| c.iter().map(|s| s.to_string()).collect()).collect();
        ChordDiagram::new(owned(circles), owned(parts))
    }

    #[test]
    fn validation() {
        assert!(diagram(&[&["1"], &["2"]], &[&["1", "2"]]).is_ok());
        assert!(diagram(&[&["1", "2", "3", "4"]], &[&["1", "3"], &["2", "4"]]).is_ok());
        assert_eq!(diagram(&[&["1"]], &[&["1"]]).unwrap_err(), DiagramError::InvalidPart { index: 0, size: 1 });
        assert_eq!(diagram(&[&["1", "2", "3"]], &[&["1", "2"]]).unwrap_err(), DiagramError::Uncovered("3".into()));
        assert_eq!(
            diagram(&[&["1", "2", "3"]], &[&["1", "2"], &["2", "3"]]).unwrap_err(),
            DiagramError::Duplicated("2".into())
        );
        assert_eq!(diagram(&[&["1", "2"]], &[&["1", "9"]]).unwrap_err(), DiagramError::UnknownSite("9".into()));
    }

    #[test]
    fn siteless_circles_pass_through() {
        let d = diagram(&[&["1", "2"], &[]], &[&["1", "2"]]).unwrap();
        let r = d.surgery_outputs();
        assert_eq!((r.input_count, r.output_count, r.components), (2, 3, 2));
        assert_eq!(r.euler_char, -1);
        assert_eq!(r.genus, 0);
        assert!(r.outputs.contains(&vec![ArcId { circle: 1, index: 0 }]));
        assert_eq!(d.gamma_graph().edge_count(), 3);
    }

    #[test]
    fn gamma_rotation_lists_both_half_edges() {
        let d = diagram(&[&["1", "2", "3", "4"]], &[&["1", "3"], &["2", "4"]]).unwrap();
        let g = d.gamma_graph();
        assert_eq!((g.vertex_count(), g.edge_count(), g.euler_char()), (2, 4, -2));
        assert!(g.rotations.iter().all(|r| r.len() == 4));
    }

    #[test]
    fn multiplicity_annotation() {
        let owned = |v: &[&[&str]]| -> Vec<Vec<String>> {
            v.iter().map(|c| c.iter().map(|s| s.to_string()).collect()).collect()
        };
        let m: BTreeMap<String, u32> = [("1".to_string(), 2)].into();
        let d = ChordDiagram::with_multiplicities(owned(&[&["1"], &["2"]]), owned(&[&["1", "2"]]), m).unwrap();
        assert_eq!(d.multiplicity(0), 2);
        assert_eq!(d.multiplicity(1), 1);
        assert_eq!(d.surgery_outputs().output_count, 1);
        let bad: BTreeMap<String, u32> = [("x".to_string(), 2)].into();
        assert!(ChordDiagram::with_multiplicities(owned(&[&["1"], &["2"]]), owned(&[&["1", "2"]]), bad).is_err());
    }
}
