//! Canonical shadow constructors for the worked examples, the universal-link
//! family, and the diagram-to-shadow pipeline with the crossing gleam rule.
//!
//! Diagrams are ingested as explicit face/crossing incidence data, not
//! coordinates. The crossing rule assigns +1/2 to the two opposite corners
//! swept by the over-strand and -1/2 to the other two; the sign convention
//! is frozen by the requirement that the standard left-trefoil input
//! reproduce gleams (1, 1, 1, -3/2) on the disc faces with annuli 0 and
//! -3/2, and locked by tests.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::qalg::{sixj_symmetric, HalfInt, QalgError};
use crate::qalg::qint_pow;
use crate::qring::RationalFunc;
use crate::shadow::{BoundaryMark, Region, ShadowPolyhedron, SingularEdge, Vertex};

#[derive(Debug, Clone, thiserror::Error)]
pub enum BuilderError {
    #[error("diagram: {0}")]
    Diagram(String),
    #[error("four-valent graph: {0}")]
    Graph(String),
    #[error(transparent)]
    Qalg(#[from] QalgError),
    #[error(transparent)]
    Qring(#[from] crate::qring::QringError),
}

// ---------------------------------------------------------------------------
// Fixed shadows
// ---------------------------------------------------------------------------

/// Shadow of the 0-framed unknot in S^3: a disc with gleam 0.
pub fn unknot_shadow() -> ShadowPolyhedron {
    ShadowPolyhedron::new(
        "unknot",
        vec![Region {
            id: 0,
            euler: 1,
            gleam: HalfInt::ZERO,
            boundary: BoundaryMark::TGraph,
        }],
        vec![],
        vec![],
    )
}

/// Collapsed shadow of the blackboard-framed left trefoil: a disc with
/// gleam -3/2 glued to the core of a Moebius strip whose annular region
/// (gleam 3) carries T. The core circle is one singular edge with no
/// vertices; the annulus meets it from both sides.
pub fn trefoil_collapsed_shadow() -> ShadowPolyhedron {
    ShadowPolyhedron::new(
        "trefoil-collapsed",
        vec![
            Region {
                id: 0,
                euler: 1,
                gleam: HalfInt::from_twice(-3),
                boundary: BoundaryMark::Interior,
            },
            Region {
                id: 1,
                euler: 0,
                gleam: HalfInt::from_int(3),
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

/// Shadow of the tetrahedral graph in S^3: the cone over the 1-skeleton of
/// a tetrahedron (the vertex local model), all gleams 0. Regions are the
/// six fins over the K4 edges; the four singular arcs run from the center
/// to the boundary graph.
pub fn tetrahedron_shadow() -> ShadowPolyhedron {
    // Region ids by K4 edge: 0=01, 1=02, 2=03, 3=12, 4=13, 5=23.
    // Opposite slot pairs are the disjoint K4 edges: (01,23), (02,13), (03,12).
    let regions = (0..6)
        .map(|id| Region {
            id,
            euler: 1,
            gleam: HalfInt::ZERO,
            boundary: BoundaryMark::TGraph,
        })
        .collect();
    // Edge e_v = singular arc toward K4 vertex v, carrying the star of v.
    let edges = vec![
        SingularEdge {
            id: 0,
            regions: [0, 1, 2], // edges 01, 02, 03 at vertex 0
        },
        SingularEdge {
            id: 1,
            regions: [0, 4, 3], // edges 01, 13, 12 at vertex 1
        },
        SingularEdge {
            id: 2,
            regions: [1, 5, 3], // edges 02, 23, 12 at vertex 2
        },
        SingularEdge {
            id: 3,
            regions: [2, 5, 4], // edges 03, 23, 13 at vertex 3
        },
    ];
    let vertices = vec![Vertex {
        id: 0,
        slots: [0, 1, 2, 5, 4, 3], // (01, 02, 03 | 23, 13, 12)
        edges: [0, 1, 2, 3],
    }];
    ShadowPolyhedron::new("tetrahedron", regions, edges, vertices)
}

// ---------------------------------------------------------------------------
// Universal hyperbolic links
// ---------------------------------------------------------------------------

/// Abstract regular neighborhood of a 4-valent graph: the combinatorial
/// input to `universal_shadow`. Each vertex lists its six region slots; each
/// edge pairs two (vertex, triple-index) ends whose slot triples must agree
/// as multisets.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FourValentGraph {
    pub label: String,
    pub vertices: Vec<GraphVertex>,
    pub edges: Vec<GraphEdge>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphVertex {
    pub id: u32,
    pub slots: [u32; 6],
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphEdge {
    pub id: u32,
    pub ends: [(u32, u8); 2],
}

impl FourValentGraph {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, BuilderError> {
        serde_json::from_str(text).map_err(|e| BuilderError::Graph(e.to_string()))
    }
}

fn slot_triple(slots: &[u32; 6], idx: u8) -> [u32; 3] {
    let [i, j, k, l, m, n] = *slots;
    match idx {
        0 => [i, j, k],
        1 => [i, m, n],
        2 => [j, l, n],
        3 => [k, l, m],
        _ => panic!("triple index out of range"),
    }
}

/// Shadow of the universal hyperbolic link attached to a 4-valent graph:
/// every region is an annulus with zero gleam carrying a component of the
/// boundary link, so the whole state sum concentrates in the 6j-symbols.
pub fn universal_shadow(g: &FourValentGraph) -> Result<ShadowPolyhedron, BuilderError> {
    let vmap: BTreeMap<u32, &GraphVertex> = g.vertices.iter().map(|v| (v.id, v)).collect();
    if vmap.len() != g.vertices.len() {
        return Err(BuilderError::Graph("duplicate vertex ids".into()));
    }
    // Each (vertex, triple-index) must be used by exactly one edge end.
    let mut used: BTreeMap<(u32, u8), u32> = BTreeMap::new();
    for e in &g.edges {
        for &(v, t) in &e.ends {
            if t > 3 {
                return Err(BuilderError::Graph(format!(
                    "edge {}: triple index {t} out of range",
                    e.id
                )));
            }
            if !vmap.contains_key(&v) {
                return Err(BuilderError::Graph(format!(
                    "edge {}: unknown vertex {v}",
                    e.id
                )));
            }
            if used.insert((v, t), e.id).is_some() {
                return Err(BuilderError::Graph(format!(
                    "vertex {v} triple {t} used by two edge ends"
                )));
            }
        }
        let t0 = {
            let v = vmap[&e.ends[0].0];
            let mut t = slot_triple(&v.slots, e.ends[0].1);
            t.sort_unstable();
            t
        };
        let t1 = {
            let v = vmap[&e.ends[1].0];
            let mut t = slot_triple(&v.slots, e.ends[1].1);
            t.sort_unstable();
            t
        };
        if t0 != t1 {
            return Err(BuilderError::Graph(format!(
                "edge {}: end triples {t0:?} and {t1:?} disagree",
                e.id
            )));
        }
    }
    if used.len() != 4 * g.vertices.len() {
        return Err(BuilderError::Graph(
            "every vertex must have exactly 4 edge ends".into(),
        ));
    }

    let mut region_ids: Vec<u32> = g
        .vertices
        .iter()
        .flat_map(|v| v.slots.into_iter())
        .collect();
    region_ids.sort_unstable();
    region_ids.dedup();
    let regions = region_ids
        .iter()
        .map(|&id| Region {
            id,
            euler: 0,
            gleam: HalfInt::ZERO,
            boundary: BoundaryMark::TGraph,
        })
        .collect();

    let edges = g
        .edges
        .iter()
        .map(|e| {
            let v = vmap[&e.ends[0].0];
            SingularEdge {
                id: e.id,
                regions: slot_triple(&v.slots, e.ends[0].1),
            }
        })
        .collect();

    let vertices = g
        .vertices
        .iter()
        .map(|v| {
            let edges_of = |t: u8| used[&(v.id, t)];
            Vertex {
                id: v.id,
                slots: v.slots,
                edges: [edges_of(0), edges_of(1), edges_of(2), edges_of(3)],
            }
        })
        .collect();

    Ok(ShadowPolyhedron::new(
        g.label.clone(),
        regions,
        edges,
        vertices,
    ))
}

/// One vertex with two loop edges; slots (A, B, C, D, B, C) so the loops
/// pair triples (0,1) and (2,3).
pub fn universal_graph_c1() -> FourValentGraph {
    FourValentGraph {
        label: "universal-1".into(),
        vertices: vec![GraphVertex {
            id: 0,
            slots: [0, 1, 2, 3, 1, 2],
        }],
        edges: vec![
            GraphEdge {
                id: 0,
                ends: [(0, 0), (0, 1)],
            },
            GraphEdge {
                id: 1,
                ends: [(0, 2), (0, 3)],
            },
        ],
    }
}

/// A second, combinatorially distinct c = 1 neighborhood: slots
/// (A, B, C, A, B, C) pair triples (0,2) and (1,3) through three regions.
pub fn universal_graph_c1_alt() -> FourValentGraph {
    FourValentGraph {
        label: "universal-1-alt".into(),
        vertices: vec![GraphVertex {
            id: 0,
            slots: [0, 1, 2, 0, 1, 2],
        }],
        edges: vec![
            GraphEdge {
                id: 0,
                ends: [(0, 0), (0, 2)],
            },
            GraphEdge {
                id: 1,
                ends: [(0, 1), (0, 3)],
            },
        ],
    }
}

/// Two vertices joined by four edges (the neighborhood with two vertices
/// and 4 edges whose link has 6 components): both vertices share the slot
/// layout, and edge t joins triple t to triple t.
pub fn universal_graph_c2() -> FourValentGraph {
    FourValentGraph {
        label: "universal-2".into(),
        vertices: vec![
            GraphVertex {
                id: 0,
                slots: [0, 1, 2, 3, 4, 5],
            },
            GraphVertex {
                id: 1,
                slots: [0, 1, 2, 3, 4, 5],
            },
        ],
        edges: (0..4)
            .map(|t| GraphEdge {
                id: t as u32,
                ends: [(0, t as u8), (1, t as u8)],
            })
            .collect(),
    }
}

/// Chain of c vertices sharing two global regions; degenerates to the
/// 3-region bouquet at c = 1. Used for general-c builds.
pub fn universal_graph_chain(c: u32) -> FourValentGraph {
    assert!(c >= 1);
    // Regions: G_i = i (one per vertex), H = c, K = c + 1.
    let h = c;
    let k = c + 1;
    let vertices = (0..c)
        .map(|i| GraphVertex {
            id: i,
            slots: [i, h, k, (i + 1) % c, h, k],
        })
        .collect();
    let mut edges = Vec::new();
    for i in 0..c {
        let next = (i + 1) % c;
        edges.push(GraphEdge {
            id: 2 * i,
            ends: [(i, 2), (next, 0)],
        });
        edges.push(GraphEdge {
            id: 2 * i + 1,
            ends: [(i, 3), (next, 1)],
        });
    }
    FourValentGraph {
        label: format!("universal-chain-{c}"),
        vertices,
        edges,
    }
}

/// Canonical universal shadow for a given complexity.
pub fn universal_shadow_canonical(c: u32) -> Result<ShadowPolyhedron, BuilderError> {
    let g = match c {
        0 => return Err(BuilderError::Graph("complexity must be at least 1".into())),
        1 => universal_graph_c1(),
        2 => universal_graph_c2(),
        _ => universal_graph_chain(c),
    };
    universal_shadow(&g)
}

/// Closed form for the universal link invariants: 0 for even d, otherwise
/// `[d]^c` times the all-equal 6j to the c-th power. Fast path bypassing
/// enumeration.
pub fn universal_jones_closed_form(c: u32, d: u32) -> Result<RationalFunc, BuilderError> {
    assert!(c >= 1 && d >= 2);
    if d.is_multiple_of(2) {
        return Ok(RationalFunc::zero());
    }
    let k = HalfInt::from_twice(d as i64 - 1);
    let sixj = sixj_symmetric(k)?;
    let bracket_d = qint_pow(d as u64, c as i64)?;
    Ok(&bracket_d * &sixj.pow(c as i32)?)
}

// ---------------------------------------------------------------------------
// Planar diagrams
// ---------------------------------------------------------------------------

/// A link diagram in a disc with holes, given by incidence data.
///
/// Strands are closed curves; arcs are the pieces between crossing
/// passages (a crossing-free strand is a single closed arc). Faces are the
/// complementary regions; each declares how many boundary circuits it has
/// along the diagram plus which hole/outer circles of the surface it
/// contains, which determines its Euler characteristic.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PlanarDiagram {
    pub label: String,
    /// Number of holes (the diagram lives in a disc with this many holes).
    pub holes: u32,
    pub strands: Vec<Strand>,
    pub arcs: Vec<Arc>,
    pub faces: Vec<Face>,
    pub crossings: Vec<Crossing>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Strand {
    pub id: u32,
    /// Half-integer deviation of the strand's framing from the blackboard
    /// framing, doubled.
    pub framing_offset_twice: i64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Arc {
    pub id: u32,
    pub strand: u32,
    /// The two faces on either side.
    pub faces: [u32; 2],
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Face {
    pub id: u32,
    /// Number of boundary circuits along the diagram.
    pub circuits: u32,
    /// Holes of the surface contained in this face.
    #[serde(default)]
    pub holes: Vec<u32>,
    /// Whether the outer boundary circle of the disc lies in this face.
    #[serde(default)]
    pub outer: bool,
}

/// A crossing lists its four corner faces in cyclic order and the four
/// arc ends between them (arc `arcs[i]` separates `faces[i]` from
/// `faces[i+1]`). The strand passages connect opposite arcs (0,2) and
/// (1,3). `over` selects which opposite corner pair (faces`[over]`,
/// faces`[over+2]`) receives +1/2; this encodes the crossing handedness.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Crossing {
    pub id: u32,
    pub faces: [u32; 4],
    pub arcs: [u32; 4],
    pub over: u8,
}

impl PlanarDiagram {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("diagram serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, BuilderError> {
        serde_json::from_str(text).map_err(|e| BuilderError::Diagram(e.to_string()))
    }

    pub fn validate(&self) -> Result<(), BuilderError> {
        let err = |msg: String| Err(BuilderError::Diagram(msg));
        let strand_ids: BTreeMap<u32, &Strand> =
            self.strands.iter().map(|s| (s.id, s)).collect();
        let face_ids: BTreeMap<u32, &Face> = self.faces.iter().map(|f| (f.id, f)).collect();
        let arc_ids: BTreeMap<u32, &Arc> = self.arcs.iter().map(|a| (a.id, a)).collect();
        if strand_ids.len() != self.strands.len()
            || face_ids.len() != self.faces.len()
            || arc_ids.len() != self.arcs.len()
        {
            return err("duplicate ids".into());
        }
        for a in &self.arcs {
            if !strand_ids.contains_key(&a.strand) {
                return err(format!("arc {}: unknown strand {}", a.id, a.strand));
            }
            for f in a.faces {
                if !face_ids.contains_key(&f) {
                    return err(format!("arc {}: unknown face {f}", a.id));
                }
            }
        }
        let mut arc_ends: BTreeMap<u32, u32> = self.arcs.iter().map(|a| (a.id, 0)).collect();
        for x in &self.crossings {
            if x.over > 1 {
                return err(format!("crossing {}: over must be 0 or 1", x.id));
            }
            for f in x.faces {
                if !face_ids.contains_key(&f) {
                    return err(format!("crossing {}: unknown face {f}", x.id));
                }
            }
            for (i, &aid) in x.arcs.iter().enumerate() {
                let Some(arc) = arc_ids.get(&aid) else {
                    return err(format!("crossing {}: unknown arc {aid}", x.id));
                };
                *arc_ends.get_mut(&aid).unwrap() += 1;
                // arc i sits between faces i and i+1 (cyclically)
                let mut expect = [x.faces[i], x.faces[(i + 1) % 4]];
                let mut got = arc.faces;
                expect.sort_unstable();
                got.sort_unstable();
                if expect != got {
                    return err(format!(
                        "crossing {}: arc {aid} separates {:?}, expected {:?}",
                        x.id, got, expect
                    ));
                }
            }
            // The two passages each belong to one strand.
            if arc_ids[&x.arcs[0]].strand != arc_ids[&x.arcs[2]].strand
                || arc_ids[&x.arcs[1]].strand != arc_ids[&x.arcs[3]].strand
            {
                return err(format!(
                    "crossing {}: opposite arcs must continue the same strand",
                    x.id
                ));
            }
        }
        for (aid, ends) in &arc_ends {
            if *ends != 0 && *ends != 2 {
                return err(format!("arc {aid}: has {ends} crossing ends, need 0 or 2"));
            }
        }
        // Holes distribute over faces exactly once each; exactly one outer face.
        let mut seen_holes = vec![false; self.holes as usize];
        let mut outer_count = 0;
        for f in &self.faces {
            if f.outer {
                outer_count += 1;
            }
            for &h in &f.holes {
                if h >= self.holes {
                    return err(format!("face {}: hole {h} out of range", f.id));
                }
                if seen_holes[h as usize] {
                    return err(format!("hole {h} contained in two faces"));
                }
                seen_holes[h as usize] = true;
            }
        }
        if outer_count != 1 {
            return err(format!("need exactly one outer face, found {outer_count}"));
        }
        if seen_holes.iter().any(|s| !s) {
            return err("every hole must lie in some face".into());
        }
        // Euler consistency: sum of face chi must equal
        // chi(S_holes) - chi(diagram graph). Crossing-free circle arcs have
        // chi 0 and drop out of the graph count.
        let chi_sum: i64 = self.faces.iter().map(|f| self.face_euler(f)).sum();
        let ended_arcs = arc_ends.values().filter(|&&e| e == 2).count() as i64;
        let expect = (1 - self.holes as i64) - (self.crossings.len() as i64 - ended_arcs);
        if chi_sum != expect {
            return err(format!(
                "face Euler characteristics sum to {chi_sum}, expected {expect}"
            ));
        }
        Ok(())
    }

    /// chi of a face region: a planar surface with one boundary circle per
    /// diagram circuit, per contained hole, and one more if it touches the
    /// outer boundary.
    fn face_euler(&self, f: &Face) -> i64 {
        2 - f.circuits as i64 - f.holes.len() as i64 - i64::from(f.outer)
    }
}

/// Region ids of the produced shadow: faces keep their ids; the annulus
/// over strand s gets `fin_base + s`.
pub fn diagram_to_shadow(dg: &PlanarDiagram) -> Result<ShadowPolyhedron, BuilderError> {
    dg.validate()?;
    let fin_base = dg.faces.iter().map(|f| f.id + 1).max().unwrap_or(0);

    // Crossing-corner gleam contributions.
    let mut gleam_twice: BTreeMap<u32, i64> = dg.faces.iter().map(|f| (f.id, 0)).collect();
    for x in &dg.crossings {
        for (i, &f) in x.faces.iter().enumerate() {
            let plus = (i % 2) == (x.over as usize % 2);
            *gleam_twice.get_mut(&f).unwrap() += if plus { 1 } else { -1 };
        }
    }

    let mut regions = Vec::new();
    for f in &dg.faces {
        let is_b = !f.holes.is_empty() || f.outer;
        regions.push(Region {
            id: f.id,
            euler: dg.face_euler(f),
            gleam: HalfInt::from_twice(gleam_twice[&f.id]),
            boundary: if is_b {
                BoundaryMark::BLink
            } else {
                BoundaryMark::Interior
            },
        });
    }
    for s in &dg.strands {
        regions.push(Region {
            id: fin_base + s.id,
            euler: 0,
            gleam: HalfInt::from_twice(s.framing_offset_twice),
            boundary: BoundaryMark::TGraph,
        });
    }

    let arc_strand: BTreeMap<u32, u32> = dg.arcs.iter().map(|a| (a.id, a.strand)).collect();
    let edges = dg
        .arcs
        .iter()
        .map(|a| SingularEdge {
            id: a.id,
            regions: [a.faces[0], a.faces[1], fin_base + a.strand],
        })
        .collect();

    // Vertex slots: (f0, f1, fin(a0/a2 strand), f2, f3, fin(a1/a3 strand));
    // incident edges in triple order (i,j,k),(i,m,n),(j,l,n),(k,l,m) are
    // arcs a0, a3, a1, a2.
    let vertices = dg
        .crossings
        .iter()
        .map(|x| {
            let fin02 = fin_base + arc_strand[&x.arcs[0]];
            let fin13 = fin_base + arc_strand[&x.arcs[1]];
            Vertex {
                id: x.id,
                slots: [x.faces[0], x.faces[1], fin02, x.faces[2], x.faces[3], fin13],
                edges: [x.arcs[0], x.arcs[3], x.arcs[1], x.arcs[2]],
            }
        })
        .collect();

    Ok(ShadowPolyhedron::new(
        dg.label.clone(),
        regions,
        edges,
        vertices,
    ))
}

/// The standard 3-crossing diagram of the blackboard-framed left trefoil
/// in a disc with no holes.
///
/// Faces: 0 = central triangle, 1..=3 = lobes (bigons), 4 = outer.
/// Arcs: alpha_i = 2i (triangle side toward lobe i), beta_i = 2i+1
/// (outer side of lobe i), lobe i lying between crossings i and i+1.
pub fn trefoil_diagram() -> PlanarDiagram {
    let faces = vec![
        Face {
            id: 0,
            circuits: 1,
            holes: vec![],
            outer: false,
        },
        Face {
            id: 1,
            circuits: 1,
            holes: vec![],
            outer: false,
        },
        Face {
            id: 2,
            circuits: 1,
            holes: vec![],
            outer: false,
        },
        Face {
            id: 3,
            circuits: 1,
            holes: vec![],
            outer: false,
        },
        Face {
            id: 4,
            circuits: 1,
            holes: vec![],
            outer: true,
        },
    ];
    let arcs = (0..3)
        .flat_map(|i| {
            [
                Arc {
                    id: 2 * i,
                    strand: 0,
                    faces: [0, i + 1], // alpha_i: triangle | lobe i
                },
                Arc {
                    id: 2 * i + 1,
                    strand: 0,
                    faces: [i + 1, 4], // beta_i: lobe i | outer
                },
            ]
        })
        .collect();
    // Crossing c sits between lobe c+1 ("previous") and lobe c ("next") in
    // cyclic order; its corners are (triangle, lobe_next, outer, lobe_prev)
    // and its arcs (alpha_next, beta_next, beta_prev, alpha_prev).
    let crossings = (0u32..3)
        .map(|c| {
            let next = c; // lobe index c
            let prev = (c + 2) % 3;
            Crossing {
                id: c,
                faces: [0, next + 1, 4, prev + 1],
                arcs: [2 * next, 2 * next + 1, 2 * prev + 1, 2 * prev],
                over: 1, // the lobe pair is swept by the over-strand
            }
        })
        .collect();
    PlanarDiagram {
        label: "trefoil-diagram".into(),
        holes: 0,
        strands: vec![Strand {
            id: 0,
            framing_offset_twice: 0,
        }],
        arcs,
        faces,
        crossings,
    }
}

/// Shadow of the left trefoil built through the diagram pipeline; the
/// output matches the worked construction region by region (disc gleams
/// 1, 1, 1, -3/2, annuli 0 and -3/2).
pub fn trefoil_diagram_shadow() -> ShadowPolyhedron {
    diagram_to_shadow(&trefoil_diagram()).expect("trefoil diagram is valid")
}

/// 0-crossing unknot in a disc with no holes.
pub fn unknot_diagram() -> PlanarDiagram {
    PlanarDiagram {
        label: "unknot-diagram".into(),
        holes: 0,
        strands: vec![Strand {
            id: 0,
            framing_offset_twice: 0,
        }],
        arcs: vec![Arc {
            id: 0,
            strand: 0,
            faces: [0, 1],
        }],
        faces: vec![
            Face {
                id: 0,
                circuits: 1,
                holes: vec![],
                outer: false,
            },
            Face {
                id: 1,
                circuits: 1,
                holes: vec![],
                outer: true,
            },
        ],
        crossings: vec![],
    }
}

/// Reidemeister-I kink on the unknot with blackboard framing. `positive`
/// selects the handedness (which corner pair the over-strand sweeps).
pub fn kink_diagram(positive: bool) -> PlanarDiagram {
    PlanarDiagram {
        label: "unknot-kink".into(),
        holes: 0,
        strands: vec![Strand {
            id: 0,
            framing_offset_twice: 0,
        }],
        // faces: 0 = inside the small loop, 1 = inside the big circle
        // (two corners), 2 = outer.
        faces: vec![
            Face {
                id: 0,
                circuits: 1,
                holes: vec![],
                outer: false,
            },
            Face {
                id: 1,
                circuits: 1,
                holes: vec![],
                outer: false,
            },
            Face {
                id: 2,
                circuits: 1,
                holes: vec![],
                outer: true,
            },
        ],
        arcs: vec![
            Arc {
                id: 0,
                strand: 0,
                faces: [0, 1], // loop arc
            },
            Arc {
                id: 1,
                strand: 0,
                faces: [1, 2], // big arc
            },
        ],
        crossings: vec![Crossing {
            id: 0,
            faces: [0, 1, 2, 1],
            arcs: [0, 1, 1, 0],
            over: if positive { 0 } else { 1 },
        }],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shadow::{ColoringMode, Finiteness};

    #[test]
    fn fixed_builders_validate() {
        for p in [
            unknot_shadow(),
            trefoil_collapsed_shadow(),
            tetrahedron_shadow(),
        ] {
            assert!(p.validate().is_empty(), "{}: {:?}", p.label, p.validate());
            assert_eq!(p.finiteness_check(), Finiteness::Finite, "{}", p.label);
        }
    }

    #[test]
    fn betti_numbers() {
        assert_eq!(unknot_shadow().first_betti().unwrap(), 0);
        assert_eq!(trefoil_collapsed_shadow().first_betti().unwrap(), 0);
        assert_eq!(tetrahedron_shadow().first_betti().unwrap(), 0);
        for c in 1..=4 {
            let p = universal_shadow_canonical(c).unwrap();
            assert!(p.validate().is_empty(), "c={c}: {:?}", p.validate());
            assert_eq!(p.first_betti().unwrap(), c as i64 + 1, "c={c}");
        }
        let alt = universal_shadow(&universal_graph_c1_alt()).unwrap();
        assert_eq!(alt.first_betti().unwrap(), 2);
    }

    #[test]
    fn universal_coloring_parity() {
        for g in [
            universal_graph_c1(),
            universal_graph_c1_alt(),
            universal_graph_c2(),
        ] {
            let p = universal_shadow(&g).unwrap();
            for d in 2..=7u32 {
                let cols = p.enumerate_colorings(d, ColoringMode::Plain).unwrap();
                if d % 2 == 1 {
                    assert_eq!(cols.len(), 1, "{} d={d}", p.label);
                    let k = HalfInt::from_twice(d as i64 - 1);
                    assert!(cols[0].iter().all(|(_, &c)| c == k));
                } else {
                    assert_eq!(cols.len(), 0, "{} d={d}", p.label);
                }
            }
        }
    }

    #[test]
    fn trefoil_diagram_matches_worked_example() {
        let p = trefoil_diagram_shadow();
        assert!(p.validate().is_empty(), "{:?}", p.validate());
        assert_eq!(p.regions().len(), 6);
        assert_eq!(p.edges().len(), 6);
        assert_eq!(p.vertices().len(), 3);
        // Gleams: triangle -3/2, lobes 1 each, outer -3/2, fin 0.
        let gleam = |id: u32| p.region(id).unwrap().gleam;
        assert_eq!(gleam(0), HalfInt::from_twice(-3));
        for lobe in 1..=3 {
            assert_eq!(gleam(lobe), HalfInt::ONE);
        }
        assert_eq!(gleam(4), HalfInt::from_twice(-3));
        assert_eq!(gleam(5), HalfInt::ZERO);
        // Boundary marks: outer face carries B, fin carries T.
        assert_eq!(p.region(4).unwrap().boundary, BoundaryMark::BLink);
        assert_eq!(p.region(5).unwrap().boundary, BoundaryMark::TGraph);
        assert_eq!(p.first_betti().unwrap(), 0);
    }

    #[test]
    fn trefoil_diagram_colorings_d2() {
        let p = trefoil_diagram_shadow();
        let cols = p.enumerate_colorings(2, ColoringMode::Plain).unwrap();
        // Lobes forced to 1/2, triangle free in {0, 1}.
        assert_eq!(cols.len(), 2);
        for c in &cols {
            for lobe in 1..=3 {
                assert_eq!(c.color(lobe), HalfInt::HALF);
            }
            assert_eq!(c.color(4), HalfInt::ZERO);
            assert_eq!(c.color(5), HalfInt::HALF);
        }
    }

    #[test]
    fn unknot_diagram_shadow_is_unknot_like() {
        let p = diagram_to_shadow(&unknot_diagram()).unwrap();
        assert!(p.validate().is_empty());
        assert_eq!(p.first_betti().unwrap(), 0);
        // One circle edge, no vertices: inner disc + outer B-annulus + fin.
        assert_eq!(p.vertices().len(), 0);
        assert_eq!(p.edges().len(), 1);
        assert_eq!(p.regions().len(), 3);
    }

    #[test]
    fn kink_diagram_valid() {
        for positive in [false, true] {
            let p = diagram_to_shadow(&kink_diagram(positive)).unwrap();
            assert!(p.validate().is_empty(), "{:?}", p.validate());
            assert_eq!(p.first_betti().unwrap(), 0);
        }
    }

    #[test]
    fn diagram_json_roundtrip() {
        let dg = trefoil_diagram();
        let text = dg.to_json();
        let back = PlanarDiagram::from_json(&text).unwrap();
        assert!(back.validate().is_ok());
        let p1 = diagram_to_shadow(&dg).unwrap();
        let p2 = diagram_to_shadow(&back).unwrap();
        assert_eq!(p1.to_json(), p2.to_json());
    }

    #[test]
    fn diagram_euler_mismatch_rejected() {
        let mut dg = trefoil_diagram();
        dg.faces[0].circuits = 2;
        assert!(dg.validate().is_err());
    }
}
