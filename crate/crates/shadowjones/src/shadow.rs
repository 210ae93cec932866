//! The combinatorial shadow data model: regions with Euler characteristic
//! and gleam, singular edges with their region triples, 4-valent vertices
//! with 6 region slots, plus validation, the graph-retraction finiteness
//! criterion, admissible-coloring enumeration and the first Betti number of
//! the presented 3-manifold.
//!
//! Shadows are ingested as combinatorial data only; gleams are supplied by
//! builders or files, never derived from embeddings.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::qalg::{is_admissible, is_r_admissible, HalfInt};

/// How a region meets the boundary of the polyhedron.
///
/// `TGraph` regions contain an edge of the framed graph T and are colored
/// (d-1)/2 at state-sum time; `BLink` regions contain a component of the
/// auxiliary link B and are colored 0; `Fixed` pins an explicit color.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum BoundaryMark {
    #[default]
    Interior,
    TGraph,
    BLink,
    Fixed(HalfInt),
}

impl BoundaryMark {
    pub fn color_for(&self, d: u32) -> Option<HalfInt> {
        match self {
            BoundaryMark::Interior => None,
            BoundaryMark::TGraph => Some(HalfInt::from_twice(d as i64 - 1)),
            BoundaryMark::BLink => Some(HalfInt::ZERO),
            BoundaryMark::Fixed(c) => Some(*c),
        }
    }

    pub fn is_boundary(&self) -> bool {
        !matches!(self, BoundaryMark::Interior)
    }
}

#[derive(Clone, Debug)]
pub struct Region {
    pub id: u32,
    /// Euler characteristic of the open region.
    pub euler: i64,
    pub gleam: HalfInt,
    pub boundary: BoundaryMark,
}

/// A singular edge and the three regions containing it, with multiplicity
/// (a region may touch an edge from both sides).
#[derive(Clone, Debug)]
pub struct SingularEdge {
    pub id: u32,
    pub regions: [u32; 3],
}

/// A vertex of the singular set. `slots` lists the six surrounding regions
/// (i, j, k, l, m, n) where (i,l), (j,m), (k,n) are the opposite pairs;
/// `edges` are the four incident edges matching the triples
/// (i,j,k), (i,m,n), (j,l,n), (k,l,m) in that order. Loop edges appear
/// twice.
#[derive(Clone, Debug)]
pub struct Vertex {
    pub id: u32,
    pub slots: [u32; 6],
    pub edges: [u32; 4],
}

impl Vertex {
    /// The four slot triples in edge-correspondence order.
    pub fn slot_triples(&self) -> [[u32; 3]; 4] {
        let [i, j, k, l, m, n] = self.slots;
        [[i, j, k], [i, m, n], [j, l, n], [k, l, m]]
    }
}

#[derive(Clone, Debug)]
pub struct ShadowPolyhedron {
    pub label: String,
    regions: Vec<Region>,
    edges: Vec<SingularEdge>,
    vertices: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub element: String,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.element, self.message)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Finiteness {
    Finite,
    Infinite { witness: Vec<u32> },
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum ShadowError {
    #[error("shadow fails validation: {}", .0.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("; "))]
    ValidationFailed(Vec<Diagnostic>),
    #[error("shadow admits infinitely many colorings (unabsorbed regions {witness:?})")]
    InfiniteShadow { witness: Vec<u32> },
    #[error("color d must be at least 2, got {0}")]
    BadColor(u32),
    #[error("level r must be at least 3, got {0}")]
    BadLevel(u32),
    #[error("region {0} not found")]
    NoSuchRegion(u32),
    #[error("region {0} does not carry the framed graph T")]
    NotTRegion(u32),
    #[error("shadow file: {0}")]
    Format(String),
}

/// Map region id -> assigned color. Admissible relative to the boundary by
/// construction when produced by `enumerate_colorings`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: BTreeMap<u32, HalfInt>,
}

impl Coloring {
    pub fn color(&self, region: u32) -> HalfInt {
        self.colors[&region]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&u32, &HalfInt)> {
        self.colors.iter()
    }

    /// Full admissibility re-check against a shadow.
    pub fn is_admissible(&self, p: &ShadowPolyhedron, d: u32, r: Option<u32>) -> bool {
        for region in p.regions() {
            let c = self.colors[&region.id];
            if !c.is_nonneg() {
                return false;
            }
            if let Some(bc) = region.boundary.color_for(d) {
                if c != bc {
                    return false;
                }
            }
        }
        for e in p.edges() {
            let [a, b, c] = e.regions.map(|id| self.colors[&id]);
            let ok = match r {
                None => is_admissible(a, b, c),
                Some(r) => is_r_admissible(a, b, c, r),
            };
            if !ok {
                return false;
            }
        }
        true
    }
}

/// Enumeration mode: plain admissible colorings of Col_d, or r-admissible
/// colorings at level r.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColoringMode {
    Plain,
    RAdmissible(u32),
}

impl ShadowPolyhedron {
    pub fn new(
        label: impl Into<String>,
        regions: Vec<Region>,
        edges: Vec<SingularEdge>,
        vertices: Vec<Vertex>,
    ) -> Self {
        let mut p = ShadowPolyhedron {
            label: label.into(),
            regions,
            edges,
            vertices,
        };
        p.regions.sort_by_key(|r| r.id);
        p.edges.sort_by_key(|e| e.id);
        p.vertices.sort_by_key(|v| v.id);
        p
    }

    pub fn regions(&self) -> &[Region] {
        &self.regions
    }

    pub fn edges(&self) -> &[SingularEdge] {
        &self.edges
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn region(&self, id: u32) -> Option<&Region> {
        self.regions.iter().find(|r| r.id == id)
    }

    pub fn edge(&self, id: u32) -> Option<&SingularEdge> {
        self.edges.iter().find(|e| e.id == id)
    }

    /// Number of vertex-ends of each edge (loops count twice). An edge with
    /// zero ends is a closed circle component of the singular set; an edge
    /// with one end reaches the boundary graph.
    pub fn edge_end_counts(&self) -> BTreeMap<u32, u32> {
        let mut counts: BTreeMap<u32, u32> =
            self.edges.iter().map(|e| (e.id, 0)).collect();
        for v in &self.vertices {
            for e in v.edges {
                if let Some(c) = counts.get_mut(&e) {
                    *c += 1;
                }
            }
        }
        counts
    }

    /// Structural validation. Empty result means every invariant holds.
    pub fn validate(&self) -> Vec<Diagnostic> {
        let mut diags = Vec::new();
        let mut push = |element: String, message: String| {
            diags.push(Diagnostic { element, message });
        };

        let region_ids: BTreeSet<u32> = self.regions.iter().map(|r| r.id).collect();
        if region_ids.len() != self.regions.len() {
            push("regions".into(), "duplicate region ids".into());
        }
        let edge_ids: BTreeSet<u32> = self.edges.iter().map(|e| e.id).collect();
        if edge_ids.len() != self.edges.len() {
            push("edges".into(), "duplicate edge ids".into());
        }
        let vertex_ids: BTreeSet<u32> = self.vertices.iter().map(|v| v.id).collect();
        if vertex_ids.len() != self.vertices.len() {
            push("vertices".into(), "duplicate vertex ids".into());
        }

        for e in &self.edges {
            for rid in e.regions {
                if !region_ids.contains(&rid) {
                    push(format!("edge {}", e.id), format!("unknown region {rid}"));
                }
            }
        }

        let edge_by_id: BTreeMap<u32, &SingularEdge> =
            self.edges.iter().map(|e| (e.id, e)).collect();
        for v in &self.vertices {
            for rid in v.slots {
                if !region_ids.contains(&rid) {
                    push(format!("vertex {}", v.id), format!("unknown region {rid}"));
                }
            }
            for (pos, (eid, slot_triple)) in
                v.edges.iter().zip(v.slot_triples()).enumerate()
            {
                match edge_by_id.get(eid) {
                    None => push(format!("vertex {}", v.id), format!("unknown edge {eid}")),
                    Some(e) => {
                        let mut a = e.regions.to_vec();
                        let mut b = slot_triple.to_vec();
                        a.sort_unstable();
                        b.sort_unstable();
                        if a != b {
                            push(
                                format!("vertex {}", v.id),
                                format!(
                                    "slot triple {} is {:?} but incident edge {} has regions {:?}",
                                    pos, slot_triple, eid, e.regions
                                ),
                            );
                        }
                    }
                }
            }
        }

        let counts = self.edge_end_counts();
        let mut boundary_endpoints = 0u32;
        for (eid, c) in &counts {
            if *c > 2 {
                push(
                    format!("edge {eid}"),
                    format!("has {c} vertex-ends; at most 2 allowed"),
                );
            }
            if *c == 1 {
                boundary_endpoints += 1;
            }
        }
        // Each 1-ended edge terminates in a trivalent vertex of the boundary
        // graph, and a trivalent graph has 3V/2 edges: V must be even.
        if !boundary_endpoints.is_multiple_of(2) {
            push(
                "edges".into(),
                format!("odd number ({boundary_endpoints}) of boundary-reaching singular edges"),
            );
        }

        diags
    }

    /// Non-fatal notes (the gleam-compatibility condition on internal
    /// regions is not enforced; builders never produce internal regions).
    pub fn warnings(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.regions.iter().any(|r| !r.boundary.is_boundary()) {
            out.push(
                "shadow has internal regions; gleam-compatibility of the thickening is not checked"
                    .to_string(),
            );
        }
        out
    }

    /// Boundedness propagation: a region becomes
    /// bounded once some singular edge shows it against two already-bounded
    /// regions (its color range is then finite by the triangle inequality).
    pub fn finiteness_check(&self) -> Finiteness {
        let mut bounded: BTreeSet<u32> = self
            .regions
            .iter()
            .filter(|r| r.boundary.is_boundary())
            .map(|r| r.id)
            .collect();
        loop {
            let mut changed = false;
            for e in &self.edges {
                for pos in 0..3 {
                    let x = e.regions[pos];
                    if bounded.contains(&x) {
                        continue;
                    }
                    let others: Vec<u32> = (0..3)
                        .filter(|&q| q != pos)
                        .map(|q| e.regions[q])
                        .collect();
                    if others.iter().all(|o| bounded.contains(o)) {
                        bounded.insert(x);
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let witness: Vec<u32> = self
            .regions
            .iter()
            .map(|r| r.id)
            .filter(|id| !bounded.contains(id))
            .collect();
        if witness.is_empty() {
            Finiteness::Finite
        } else {
            Finiteness::Infinite { witness }
        }
    }

    /// Deterministic region-processing order for enumeration: boundary
    /// regions first (ascending id), then repeatedly the smallest free
    /// region constrained by an edge whose other two slots are already
    /// placed. Returns (order, bounding edge index per region if any).
    fn propagation_order(&self) -> (Vec<u32>, BTreeMap<u32, u32>) {
        let mut placed: BTreeSet<u32> = BTreeSet::new();
        let mut order = Vec::new();
        let mut bounding_edge = BTreeMap::new();
        for r in &self.regions {
            if r.boundary.is_boundary() {
                placed.insert(r.id);
                order.push(r.id);
            }
        }
        loop {
            let mut best: Option<(u32, u32)> = None; // (region, edge)
            for e in &self.edges {
                for pos in 0..3 {
                    let x = e.regions[pos];
                    if placed.contains(&x) {
                        continue;
                    }
                    let others_ok = (0..3)
                        .filter(|&q| q != pos)
                        .all(|q| placed.contains(&e.regions[q]));
                    if others_ok && best.is_none_or(|(bx, _)| x < bx) {
                        best = Some((x, e.id));
                    }
                }
            }
            match best {
                Some((x, eid)) => {
                    placed.insert(x);
                    bounding_edge.insert(x, eid);
                    order.push(x);
                }
                None => break,
            }
        }
        // Any remaining regions (possible in r-admissible mode only) go
        // last in id order; their range comes from the level cap.
        for r in &self.regions {
            if !placed.contains(&r.id) {
                order.push(r.id);
            }
        }
        (order, bounding_edge)
    }

    /// All admissible (resp. r-admissible) colorings relative to the
    /// boundary coloring at color d, in deterministic DFS order.
    pub fn enumerate_colorings(
        &self,
        d: u32,
        mode: ColoringMode,
    ) -> Result<Vec<Coloring>, ShadowError> {
        if d < 2 {
            return Err(ShadowError::BadColor(d));
        }
        let level = match mode {
            ColoringMode::Plain => {
                if let Finiteness::Infinite { witness } = self.finiteness_check() {
                    return Err(ShadowError::InfiniteShadow { witness });
                }
                None
            }
            ColoringMode::RAdmissible(r) => {
                if r < 3 {
                    return Err(ShadowError::BadLevel(r));
                }
                Some(r)
            }
        };

        let (order, bounding_edge) = self.propagation_order();
        let mut assigned: BTreeMap<u32, HalfInt> = BTreeMap::new();
        let mut out = Vec::new();
        self.dfs_colorings(d, level, &order, &bounding_edge, 0, &mut assigned, &mut out);
        Ok(out)
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs_colorings(
        &self,
        d: u32,
        level: Option<u32>,
        order: &[u32],
        bounding_edge: &BTreeMap<u32, u32>,
        depth: usize,
        assigned: &mut BTreeMap<u32, HalfInt>,
        out: &mut Vec<Coloring>,
    ) {
        if depth == order.len() {
            out.push(Coloring {
                colors: assigned.clone(),
            });
            return;
        }
        let rid = order[depth];
        let region = self.region(rid).expect("ordered region exists");
        let cap_twice = level.map(|r| r as i64 - 2);

        let candidates: Vec<HalfInt> = if let Some(bc) = region.boundary.color_for(d) {
            if cap_twice.is_some_and(|cap| bc.twice() > cap) || !bc.is_nonneg() {
                vec![]
            } else {
                vec![bc]
            }
        } else if let Some(&eid) = bounding_edge.get(&rid) {
            let e = self.edge(eid).expect("bounding edge exists");
            let others: Vec<HalfInt> = {
                let pos = e
                    .regions
                    .iter()
                    .position(|&x| x == rid)
                    .expect("region on its bounding edge");
                (0..3)
                    .filter(|&q| q != pos)
                    .map(|q| assigned[&e.regions[q]])
                    .collect()
            };
            let (a, b) = (others[0], others[1]);
            let lo = (a.twice() - b.twice()).abs();
            let hi_triangle = a.twice() + b.twice();
            let hi = match cap_twice {
                Some(cap) => hi_triangle.min(cap),
                None => hi_triangle,
            };
            (lo..=hi)
                .step_by(2)
                .map(HalfInt::from_twice)
                .collect()
        } else {
            // Unconstrained region: only reachable in r-admissible mode.
            let cap = cap_twice.expect("plain mode covers all regions via propagation");
            (0..=cap).map(HalfInt::from_twice).collect()
        };

        'cand: for c in candidates {
            assigned.insert(rid, c);
            // Check every edge that just became fully colored.
            for e in &self.edges {
                if !e.regions.contains(&rid) {
                    continue;
                }
                let colors: Option<Vec<HalfInt>> = e
                    .regions
                    .iter()
                    .map(|x| assigned.get(x).copied())
                    .collect();
                if let Some(cs) = colors {
                    let ok = match level {
                        None => is_admissible(cs[0], cs[1], cs[2]),
                        Some(r) => is_r_admissible(cs[0], cs[1], cs[2], r),
                    };
                    if !ok {
                        assigned.remove(&rid);
                        continue 'cand;
                    }
                }
            }
            self.dfs_colorings(d, level, order, bounding_edge, depth + 1, assigned, out);
            assigned.remove(&rid);
        }
    }

    /// First Betti number b1(N) = 1 - chi(P) for graph-retracting shadows.
    ///
    /// chi(P) decomposes over the open cells plus the boundary graph:
    /// regions contribute their euler field, vertices +1, each non-circle
    /// singular edge -1, and each boundary-reaching edge end terminates in a
    /// trivalent boundary vertex (a trivalent graph with V vertices has
    /// 3V/2 edges, so the boundary graph part contributes -V/2). Boundary
    /// circles contribute 0.
    pub fn first_betti(&self) -> Result<i64, ShadowError> {
        if let Finiteness::Infinite { witness } = self.finiteness_check() {
            return Err(ShadowError::InfiniteShadow { witness });
        }
        let counts = self.edge_end_counts();
        let arcs = counts.values().filter(|&&c| c >= 1).count() as i64;
        let boundary_endpoints = counts.values().filter(|&&c| c == 1).count() as i64;
        let chi: i64 = self.regions.iter().map(|r| r.euler).sum::<i64>()
            + self.vertices.len() as i64
            - arcs
            - boundary_endpoints / 2;
        Ok(1 - chi)
    }
}

// ---------------------------------------------------------------------------
// JSON file format
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct RegionDto {
    id: u32,
    euler: i64,
    gleam_twice: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    boundary: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    boundary_color_twice: Option<i64>,
}

#[derive(Serialize, Deserialize)]
struct EdgeDto {
    id: u32,
    regions: [u32; 3],
}

#[derive(Serialize, Deserialize)]
struct VertexDto {
    id: u32,
    slots: [u32; 6],
    edges: [u32; 4],
}

#[derive(Serialize, Deserialize)]
struct ShadowDto {
    label: String,
    regions: Vec<RegionDto>,
    edges: Vec<EdgeDto>,
    vertices: Vec<VertexDto>,
}

impl ShadowPolyhedron {
    pub fn to_json(&self) -> String {
        let dto = ShadowDto {
            label: self.label.clone(),
            regions: self
                .regions
                .iter()
                .map(|r| {
                    let (boundary, boundary_color_twice) = match r.boundary {
                        BoundaryMark::Interior => (None, None),
                        BoundaryMark::TGraph => (Some("t".to_string()), None),
                        BoundaryMark::BLink => (Some("b".to_string()), None),
                        BoundaryMark::Fixed(c) => (None, Some(c.twice())),
                    };
                    RegionDto {
                        id: r.id,
                        euler: r.euler,
                        gleam_twice: r.gleam.twice(),
                        boundary,
                        boundary_color_twice,
                    }
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeDto {
                    id: e.id,
                    regions: e.regions,
                })
                .collect(),
            vertices: self
                .vertices
                .iter()
                .map(|v| VertexDto {
                    id: v.id,
                    slots: v.slots,
                    edges: v.edges,
                })
                .collect(),
        };
        serde_json::to_string_pretty(&dto).expect("shadow serializes")
    }

    /// Parse and validate; any diagnostic rejects the file.
    pub fn from_json(text: &str) -> Result<Self, ShadowError> {
        let dto: ShadowDto =
            serde_json::from_str(text).map_err(|e| ShadowError::Format(e.to_string()))?;
        let mut regions = Vec::new();
        for r in dto.regions {
            let boundary = match (r.boundary.as_deref(), r.boundary_color_twice) {
                (Some("t") | Some("T"), None) => BoundaryMark::TGraph,
                (Some("b") | Some("B"), None) => BoundaryMark::BLink,
                (None, Some(tw)) => BoundaryMark::Fixed(HalfInt::from_twice(tw)),
                (None, None) => BoundaryMark::Interior,
                (Some(other), None) => {
                    return Err(ShadowError::Format(format!(
                        "region {}: unknown boundary mark {other:?}",
                        r.id
                    )))
                }
                (Some(_), Some(_)) => {
                    return Err(ShadowError::Format(format!(
                        "region {}: both boundary mark and fixed color given",
                        r.id
                    )))
                }
            };
            regions.push(Region {
                id: r.id,
                euler: r.euler,
                gleam: HalfInt::from_twice(r.gleam_twice),
                boundary,
            });
        }
        let edges = dto
            .edges
            .into_iter()
            .map(|e| SingularEdge {
                id: e.id,
                regions: e.regions,
            })
            .collect();
        let vertices = dto
            .vertices
            .into_iter()
            .map(|v| Vertex {
                id: v.id,
                slots: v.slots,
                edges: v.edges,
            })
            .collect();
        let p = ShadowPolyhedron::new(dto.label, regions, edges, vertices);
        let diags = p.validate();
        if !diags.is_empty() {
            return Err(ShadowError::ValidationFailed(diags));
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(twice: i64) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    /// Disc with gleam 0 carrying T: the 0-framed unknot shadow.
    fn unknot() -> ShadowPolyhedron {
        ShadowPolyhedron::new(
            "unknot",
            vec![Region {
                id: 0,
                euler: 1,
                gleam: h(0),
                boundary: BoundaryMark::TGraph,
            }],
            vec![],
            vec![],
        )
    }

    /// Disc glued to the core of a Moebius strip: the collapsed trefoil
    /// shadow. One circle edge, no vertices.
    fn trefoil_collapsed() -> ShadowPolyhedron {
        ShadowPolyhedron::new(
            "trefoil",
            vec![
                Region {
                    id: 0,
                    euler: 1,
                    gleam: h(-3),
                    boundary: BoundaryMark::Interior,
                },
                Region {
                    id: 1,
                    euler: 0,
                    gleam: h(6),
                    boundary: BoundaryMark::TGraph,
                },
            ],
            vec![SingularEdge {
                id: 0,
                regions: [0, 1, 1],
            }],
            vec![],
        )
    }

    /// Closed sphere: no boundary, infinitely many colorings.
    fn sphere() -> ShadowPolyhedron {
        ShadowPolyhedron::new(
            "sphere",
            vec![Region {
                id: 0,
                euler: 2,
                gleam: h(2),
                boundary: BoundaryMark::Interior,
            }],
            vec![],
            vec![],
        )
    }

    #[test]
    fn unknot_validates_and_is_finite() {
        let p = unknot();
        assert!(p.validate().is_empty());
        assert_eq!(p.finiteness_check(), Finiteness::Finite);
        assert_eq!(p.first_betti().unwrap(), 0);
    }

    #[test]
    fn constructed_violation_is_diagnosed() {
        // A vertex whose first slot-triple mismatches its first edge.
        let p = ShadowPolyhedron::new(
            "broken",
            (0..6)
                .map(|id| Region {
                    id,
                    euler: 0,
                    gleam: h(0),
                    boundary: BoundaryMark::TGraph,
                })
                .collect(),
            vec![
                SingularEdge {
                    id: 0,
                    regions: [0, 1, 3], // should be [0,1,2] to match slots
                },
                SingularEdge {
                    id: 1,
                    regions: [0, 4, 5],
                },
                SingularEdge {
                    id: 2,
                    regions: [1, 3, 5],
                },
                SingularEdge {
                    id: 3,
                    regions: [2, 3, 4],
                },
            ],
            vec![Vertex {
                id: 0,
                slots: [0, 1, 2, 3, 4, 5],
                edges: [0, 1, 2, 3],
            }],
        );
        let diags = p.validate();
        assert_eq!(diags.len(), 1);
        assert!(diags[0].element.contains("vertex 0"));
    }

    #[test]
    fn sphere_is_infinite() {
        match sphere().finiteness_check() {
            Finiteness::Infinite { witness } => assert_eq!(witness, vec![0]),
            f => panic!("expected infinite, got {f:?}"),
        }
        assert!(matches!(
            sphere().enumerate_colorings(3, ColoringMode::Plain),
            Err(ShadowError::InfiniteShadow { .. })
        ));
    }

    #[test]
    fn trefoil_collapsed_colorings() {
        let p = trefoil_collapsed();
        assert!(p.validate().is_empty());
        assert_eq!(p.first_betti().unwrap(), 0);
        // d = 2: disc color k in {0, 1} against the (k, 1/2, 1/2) edge.
        let cols = p.enumerate_colorings(2, ColoringMode::Plain).unwrap();
        assert_eq!(cols.len(), 2);
        assert_eq!(cols[0].color(0), h(0));
        assert_eq!(cols[1].color(0), h(2));
        for c in &cols {
            assert!(c.is_admissible(&p, 2, None));
        }
        // Generally d colorings.
        for d in 2..=7 {
            let cols = p.enumerate_colorings(d, ColoringMode::Plain).unwrap();
            assert_eq!(cols.len(), d as usize);
        }
    }

    #[test]
    fn r_admissible_agrees_with_plain_when_r_large() {
        let p = trefoil_collapsed();
        for d in 2..=5u32 {
            let plain = p.enumerate_colorings(d, ColoringMode::Plain).unwrap();
            let max_color = plain
                .iter()
                .flat_map(|c| c.iter().map(|(_, h)| h.twice()))
                .max()
                .unwrap();
            // Stabilization: r-admissible set coincides once r exceeds
            // 3 * max color.
            let r_big = (3 * max_color / 2 + 3) as u32;
            let radm = p
                .enumerate_colorings(d, ColoringMode::RAdmissible(r_big))
                .unwrap();
            assert_eq!(plain, radm, "d={d} r={r_big}");
            // And is genuinely smaller for tiny r.
            let small = p
                .enumerate_colorings(d, ColoringMode::RAdmissible(3))
                .unwrap();
            assert!(small.len() <= plain.len());
        }
    }

    #[test]
    fn finiteness_monotone_under_boundary_marking() {
        // Marking a region of an infinite shadow never turns Finite into
        // Infinite; here it turns Infinite into Finite.
        let mut p = sphere();
        p.regions[0].boundary = BoundaryMark::Fixed(h(4));
        assert_eq!(p.finiteness_check(), Finiteness::Finite);
    }

    #[test]
    fn json_roundtrip_and_rejection() {
        let p = trefoil_collapsed();
        let text = p.to_json();
        let q = ShadowPolyhedron::from_json(&text).unwrap();
        assert_eq!(q.to_json(), text);
        assert_eq!(q.regions()[1].gleam, h(6));

        // Corrupt: vertex references a missing edge.
        let bad = r#"{
            "label": "bad",
            "regions": [{"id":0,"euler":1,"gleam_twice":0,"boundary":"t"}],
            "edges": [],
            "vertices": [{"id":0,"slots":[0,0,0,0,0,0],"edges":[9,9,9,9]}]
        }"#;
        assert!(matches!(
            ShadowPolyhedron::from_json(bad),
            Err(ShadowError::ValidationFailed(_))
        ));
    }

    #[test]
    fn duplicate_region_in_edge_constrains_via_pair() {
        // Edge (x, x, s): the doubled slot never bounds x, but s is bounded
        // once x is colored. A region bounded only through its own double
        // slot stays unbounded.
        let p = ShadowPolyhedron::new(
            "self-touch",
            vec![
                Region {
                    id: 0,
                    euler: 0,
                    gleam: h(0),
                    boundary: BoundaryMark::Interior,
                },
                Region {
                    id: 1,
                    euler: 0,
                    gleam: h(0),
                    boundary: BoundaryMark::TGraph,
                },
            ],
            vec![SingularEdge {
                id: 0,
                regions: [0, 0, 1],
            }],
            vec![],
        );
        // Region 0 appears twice: (x, x, j) leaves x >= j/2 unbounded.
        match p.finiteness_check() {
            Finiteness::Infinite { witness } => assert_eq!(witness, vec![0]),
            f => panic!("expected infinite, got {f:?}"),
        }
    }
}
