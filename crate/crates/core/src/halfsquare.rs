//! Half-square recognition for the restricted root classes.
//!
//! Every recognizer either returns a root whose half-square on X is the
//! input graph (vertex ids preserved) together with a class witness, or an
//! obstruction found in the input. Constructed roots are always re-checked
//! with [`verify_root`] before they are returned.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::VerifyError;
use crate::graph::{
    half_square, twin_quotient, vertex_clique_incidence, BipartiteGraph, Graph, Side,
};
use crate::recognition::{
    check_bisplit_partition, check_side_ordering, check_star_center, find_gamma, interval_model,
    is_block_graph, is_chordal_bipartite, is_doubly_lexical, is_split, is_strongly_chordal,
    is_unit_interval, BinaryMatrix, BisplitPartition, DoublyLexOrdering, Obstruction,
    ObstructionKind, SideOrdering,
};

/// Root classes with half-square support.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassTag {
    StarConvex,
    StarBiconvex,
    Convex,
    Biconvex,
    ChordalBipartite,
    Tree,
    BalancedBisplit,
}

impl ClassTag {
    pub const ALL: [ClassTag; 7] = [
        ClassTag::StarConvex,
        ClassTag::StarBiconvex,
        ClassTag::Convex,
        ClassTag::Biconvex,
        ClassTag::ChordalBipartite,
        ClassTag::Tree,
        ClassTag::BalancedBisplit,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClassTag::StarConvex => "star_convex",
            ClassTag::StarBiconvex => "star_biconvex",
            ClassTag::Convex => "convex",
            ClassTag::Biconvex => "biconvex",
            ClassTag::ChordalBipartite => "chordal_bipartite",
            ClassTag::Tree => "tree",
            ClassTag::BalancedBisplit => "balanced_bisplit",
        }
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassTag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClassTag::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| format!("unknown class tag '{s}'"))
    }
}

/// A star center on one side of a root; `None` only for an empty side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarCenter {
    pub side: Side,
    pub vertex: Option<usize>,
}

/// Class-specific evidence that a root belongs to its class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// One center for star convex, one per side for star biconvex.
    StarCenters(Vec<StarCenter>),
    /// One ordering for convex, an X and a Y ordering for biconvex.
    Orderings(Vec<SideOrdering>),
    /// Γ-free doubly lexical ordering of the root's biadjacency matrix.
    DoublyLexical(DoublyLexOrdering),
    /// The root is a tree, or a forest when `forest` is set.
    Tree {
        forest: bool,
    },
    Bisplit(BisplitPartition),
}

impl Witness {
    pub fn kind(&self) -> &'static str {
        match self {
            Witness::StarCenters(_) => "star_center",
            Witness::Orderings(_) => "side_orderings",
            Witness::DoublyLexical(_) => "doubly_lexical",
            Witness::Tree { .. } => "tree",
            Witness::Bisplit(_) => "bisplit_partition",
        }
    }
}

/// A half-root of a graph together with its class witness. The X side of
/// `root` is the vertex set of the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootCertificate {
    pub class: ClassTag,
    pub root: BipartiteGraph,
    pub witness: Witness,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RecognitionOutcome {
    Yes(RootCertificate),
    No(Obstruction),
}

impl RecognitionOutcome {
    pub fn is_yes(&self) -> bool {
        matches!(self, RecognitionOutcome::Yes(_))
    }

    pub fn certificate(&self) -> Option<&RootCertificate> {
        match self {
            RecognitionOutcome::Yes(c) => Some(c),
            RecognitionOutcome::No(_) => None,
        }
    }

    pub fn obstruction(&self) -> Option<&Obstruction> {
        match self {
            RecognitionOutcome::Yes(_) => None,
            RecognitionOutcome::No(o) => Some(o),
        }
    }
}

fn certified(g: &Graph, cert: RootCertificate) -> RecognitionOutcome {
    if let Err(e) = verify_root(g, &cert) {
        panic!("constructed {} root failed verification: {e}", cert.class);
    }
    RecognitionOutcome::Yes(cert)
}

/// Runs the recognizer for `class`. Tree roots are strict unless `forest`
/// is set. Returns `None` for [`ClassTag::BalancedBisplit`], whose
/// recognition problem is NP-hard and handled by the hardness module.
pub fn recognize(g: &Graph, class: ClassTag, forest: bool) -> Option<RecognitionOutcome> {
    Some(match class {
        ClassTag::StarConvex => hs_star_convex(g),
        ClassTag::StarBiconvex => hs_star_biconvex(g),
        ClassTag::Convex => hs_convex(g),
        ClassTag::Biconvex => hs_biconvex(g),
        ClassTag::ChordalBipartite => hs_chordal_bipartite(g),
        ClassTag::Tree => hs_tree(g, forest),
        ClassTag::BalancedBisplit => return None,
    })
}

/// One pendant Y-vertex per vertex.
fn pendant_root(n: usize) -> BipartiteGraph {
    BipartiteGraph::from_y_neighborhoods(n, (0..n).map(|v| vec![v]).collect())
}

/// Root of a graph whose only big component `comp` has the universal
/// vertices `universal`: those are joined to every Y-vertex, every other
/// component vertex gets a private Y-vertex, and the edges among the other
/// component vertices are subdivided.
fn universal_component_root(g: &Graph, comp: &[usize], universal: &[usize]) -> BipartiteGraph {
    let rest: Vec<usize> = comp
        .iter()
        .copied()
        .filter(|v| !universal.contains(v))
        .collect();
    if rest.is_empty() {
        return BipartiteGraph::from_y_neighborhoods(g.n(), vec![universal.to_vec()]);
    }
    let mut yadj: Vec<Vec<usize>> = rest
        .iter()
        .map(|&x| universal.iter().copied().chain([x]).collect())
        .collect();
    for (a, b) in g.edges() {
        if rest.contains(&a) && rest.contains(&b) {
            yadj.push(universal.iter().copied().chain([a, b]).collect());
        }
    }
    BipartiteGraph::from_y_neighborhoods(g.n(), yadj)
}

/// Y-neighborhoods over a twin quotient split as `(clique, stable)`
/// (quotient ids): Y-vertex 0 sees every member of a clique-side class, and
/// one further Y-vertex per stable class `s` sees the members of `s` and of
/// its quotient neighbors.
fn split_quotient_neighborhoods(
    quotient: &Graph,
    class_members: &[Vec<usize>],
    clique: &[usize],
    stable: &[usize],
) -> Vec<Vec<usize>> {
    let members = |classes: &mut dyn Iterator<Item = usize>| -> Vec<usize> {
        let mut out: Vec<usize> = classes
            .flat_map(|c| class_members[c].iter().copied())
            .collect();
        out.sort_unstable();
        out
    };
    let mut yadj = vec![members(&mut clique.iter().copied())];
    for &s in stable {
        yadj.push(members(
            &mut std::iter::once(s).chain(quotient.neighbors(s).iter().copied()),
        ));
    }
    yadj
}

/// Non-split obstruction on quotient ids, mapped to representatives in `g`.
fn non_split_witness(o: Obstruction, reps: &[usize]) -> Obstruction {
    Obstruction::new(
        ObstructionKind::NonSplitQuotient,
        o.witness.iter().map(|&q| reps[q]).collect(),
    )
}

/// Star convex roots: a single big component with a universal vertex, or a
/// split twin quotient.
pub fn hs_star_convex(g: &Graph) -> RecognitionOutcome {
    let n = g.n();
    let big = g.big_components();
    if big.is_empty() {
        return certified(
            g,
            RootCertificate {
                class: ClassTag::StarConvex,
                root: pendant_root(n),
                witness: Witness::StarCenters(vec![StarCenter {
                    side: Side::X,
                    vertex: (n > 0).then_some(0),
                }]),
            },
        );
    }
    if big.len() == 1 {
        let comp = &big[0];
        let universal: Vec<usize> = comp
            .iter()
            .copied()
            .filter(|&v| g.degree(v) + 1 == comp.len())
            .collect();
        if let Some(&u) = universal.first() {
            return certified(
                g,
                RootCertificate {
                    class: ClassTag::StarConvex,
                    root: universal_component_root(g, comp, &universal),
                    witness: Witness::StarCenters(vec![StarCenter {
                        side: Side::X,
                        vertex: Some(u),
                    }]),
                },
            );
        }
    }
    let (quotient, twins) = twin_quotient(g);
    match is_split(&quotient) {
        Ok(p) => {
            let yadj = split_quotient_neighborhoods(
                &quotient,
                &twins.classes,
                &p.clique_side,
                &p.stable_side,
            );
            certified(
                g,
                RootCertificate {
                    class: ClassTag::StarConvex,
                    root: BipartiteGraph::from_y_neighborhoods(n, yadj),
                    witness: Witness::StarCenters(vec![StarCenter {
                        side: Side::Y,
                        vertex: Some(0),
                    }]),
                },
            )
        }
        Err(o) => RecognitionOutcome::No(non_split_witness(o, &twins.representatives())),
    }
}

/// Star biconvex roots: at most one big component, whose twin quotient is a
/// split graph with a universal vertex.
pub fn hs_star_biconvex(g: &Graph) -> RecognitionOutcome {
    let n = g.n();
    let big = g.big_components();
    let centers = |x: Option<usize>, y: Option<usize>| {
        Witness::StarCenters(vec![
            StarCenter {
                side: Side::X,
                vertex: x,
            },
            StarCenter {
                side: Side::Y,
                vertex: y,
            },
        ])
    };
    match big.len() {
        0 => {
            let v = (n > 0).then_some(0);
            return certified(
                g,
                RootCertificate {
                    class: ClassTag::StarBiconvex,
                    root: pendant_root(n),
                    witness: centers(v, v),
                },
            );
        }
        1 => {}
        _ => {
            let edge = |c: &[usize]| (c[0], g.neighbors(c[0])[0]);
            let (a, b) = edge(&big[0]);
            let (c, d) = edge(&big[1]);
            return RecognitionOutcome::No(Obstruction::new(
                ObstructionKind::ExtraBigComponent,
                vec![a, b, c, d],
            ));
        }
    }
    let comp = &big[0];
    let (quotient, twins) = twin_quotient(&g.induced_subgraph(comp));
    let reps: Vec<usize> = twins.representatives().iter().map(|&r| comp[r]).collect();
    let p = match is_split(&quotient) {
        Ok(p) => p,
        Err(o) => return RecognitionOutcome::No(non_split_witness(o, &reps)),
    };
    let Some(&u) = quotient.universal_vertices().first() else {
        return RecognitionOutcome::No(Obstruction::new(
            ObstructionKind::NoUniversalVertex,
            comp.clone(),
        ));
    };
    // a universal vertex can always join the clique side
    let mut clique = p.clique_side.clone();
    if !clique.contains(&u) {
        clique.push(u);
        clique.sort_unstable();
    }
    let stable: Vec<usize> = p.stable_side.iter().copied().filter(|&s| s != u).collect();
    let members: Vec<Vec<usize>> = twins
        .classes
        .iter()
        .map(|c| c.iter().map(|&i| comp[i]).collect())
        .collect();
    let mut yadj = split_quotient_neighborhoods(&quotient, &members, &clique, &stable);
    yadj.extend(g.isolated_vertices().into_iter().map(|v| vec![v]));
    certified(
        g,
        RootCertificate {
            class: ClassTag::StarBiconvex,
            root: BipartiteGraph::from_y_neighborhoods(n, yadj),
            witness: centers(Some(reps[u]), Some(0)),
        },
    )
}

/// Convex roots: the maximal cliques of an interval graph in chain order.
pub fn hs_convex(g: &Graph) -> RecognitionOutcome {
    let chain = match interval_model(g) {
        Ok(c) => c,
        Err(o) => return RecognitionOutcome::No(o),
    };
    let root = BipartiteGraph::from_y_neighborhoods(g.n(), chain.cliques.clone());
    let perm = (0..root.ny()).collect();
    certified(
        g,
        RootCertificate {
            class: ClassTag::Convex,
            root,
            witness: Witness::Orderings(vec![SideOrdering {
                side: Side::Y,
                perm,
            }]),
        },
    )
}

/// Biconvex roots: the clique chain of a unit interval graph, with the
/// vertices sorted by their `(left, right)` chain indices.
pub fn hs_biconvex(g: &Graph) -> RecognitionOutcome {
    let chain = match is_unit_interval(g) {
        Ok(c) => c,
        Err(o) => return RecognitionOutcome::No(o),
    };
    let root = BipartiteGraph::from_y_neighborhoods(g.n(), chain.cliques.clone());
    let y = SideOrdering {
        side: Side::Y,
        perm: (0..root.ny()).collect(),
    };
    let x = SideOrdering {
        side: Side::X,
        perm: chain.vertex_order(),
    };
    certified(
        g,
        RootCertificate {
            class: ClassTag::Biconvex,
            root,
            witness: Witness::Orderings(vec![x, y]),
        },
    )
}

/// Chordal bipartite roots: the vertex-clique incidence graph of a strongly
/// chordal graph.
pub fn hs_chordal_bipartite(g: &Graph) -> RecognitionOutcome {
    if let Err(o) = is_strongly_chordal(g) {
        return RecognitionOutcome::No(o);
    }
    let root = vertex_clique_incidence(g);
    let ordering = is_chordal_bipartite(&root)
        .expect("incidence graph of a strongly chordal graph is chordal bipartite");
    certified(
        g,
        RootCertificate {
            class: ClassTag::ChordalBipartite,
            root,
            witness: Witness::DoublyLexical(ordering),
        },
    )
}

/// Tree roots: the vertex-clique incidence graph of a connected block
/// graph. With `forest` set, disconnected block graphs are accepted and the
/// root is a forest.
pub fn hs_tree(g: &Graph, forest: bool) -> RecognitionOutcome {
    if let Err(o) = is_block_graph(g) {
        return RecognitionOutcome::No(o);
    }
    let comps = g.components();
    if !forest && comps.len() > 1 {
        return RecognitionOutcome::No(Obstruction::new(
            ObstructionKind::Disconnected,
            vec![comps[0][0], comps[1][0]],
        ));
    }
    certified(
        g,
        RootCertificate {
            class: ClassTag::Tree,
            root: vertex_clique_incidence(g),
            witness: Witness::Tree { forest },
        },
    )
}

fn witness_error(class: ClassTag, reason: impl Into<String>) -> VerifyError {
    VerifyError::Witness {
        class: class.to_string(),
        reason: reason.into(),
    }
}

/// Checks that `half_square(cert.root, X)` equals `g` on identical vertex
/// ids and that the class witness is valid for the root.
pub fn verify_root(g: &Graph, cert: &RootCertificate) -> Result<(), VerifyError> {
    let b = &cert.root;
    if b.nx() != g.n() {
        return Err(VerifyError::SideMismatch {
            expected: g.n(),
            got: b.nx(),
        });
    }
    let h = half_square(b, Side::X);
    if h != *g {
        let (u, v) = (0..g.n())
            .flat_map(|u| (u + 1..g.n()).map(move |v| (u, v)))
            .find(|&(u, v)| g.has_edge(u, v) != h.has_edge(u, v))
            .expect("graphs differ in some pair");
        return Err(VerifyError::HalfSquareMismatch {
            u,
            v,
            in_graph: g.has_edge(u, v),
        });
    }
    check_witness(cert).map_err(|r| witness_error(cert.class, r))
}

fn check_witness(cert: &RootCertificate) -> Result<(), String> {
    let b = &cert.root;
    let class = cert.class;
    let mismatch = || {
        Err(format!(
            "witness kind {} does not fit class {class}",
            cert.witness.kind()
        ))
    };
    match (&cert.witness, class) {
        (Witness::StarCenters(cs), ClassTag::StarConvex) => {
            let [c] = cs.as_slice() else {
                return Err(format!("expected one star center, got {}", cs.len()));
            };
            check_star_center(b, c.side, c.vertex)
        }
        (Witness::StarCenters(cs), ClassTag::StarBiconvex) => {
            let sides: Vec<Side> = cs.iter().map(|c| c.side).collect();
            if sides != [Side::X, Side::Y] {
                return Err("expected an X center followed by a Y center".into());
            }
            cs.iter()
                .try_for_each(|c| check_star_center(b, c.side, c.vertex))
        }
        (Witness::Orderings(os), ClassTag::Convex) => {
            let [o] = os.as_slice() else {
                return Err(format!("expected one ordering, got {}", os.len()));
            };
            check_side_ordering(b, o)
        }
        (Witness::Orderings(os), ClassTag::Biconvex) => {
            let sides: Vec<Side> = os.iter().map(|o| o.side).collect();
            if sides != [Side::X, Side::Y] {
                return Err("expected an X ordering followed by a Y ordering".into());
            }
            os.iter().try_for_each(|o| check_side_ordering(b, o))
        }
        (Witness::DoublyLexical(ord), ClassTag::ChordalBipartite) => {
            let rows: Vec<Vec<usize>> = (0..b.nx()).map(|x| b.x_neighbors(x).to_vec()).collect();
            let m = BinaryMatrix::from_row_supports(&rows, b.ny());
            if !is_doubly_lexical(&m, ord) {
                return Err("ordering is not doubly lexical".into());
            }
            if !ord.gamma_free {
                return Err("ordering is not flagged gamma-free".into());
            }
            match find_gamma(&m, ord) {
                Some((i, j, k, l)) => Err(format!("Γ at rows ({i}, {j}) and columns ({k}, {l})")),
                None => Ok(()),
            }
        }
        (Witness::Tree { forest }, ClassTag::Tree) => check_forest(b, *forest),
        (Witness::Bisplit(p), ClassTag::BalancedBisplit) => check_bisplit_partition(b, p),
        _ => mismatch(),
    }
}

fn check_forest(b: &BipartiteGraph, forest: bool) -> Result<(), String> {
    let g = b.as_graph();
    let comps = g.components().len();
    if g.m() + comps != g.n() {
        return Err("root contains a cycle".into());
    }
    if !forest && comps > 1 {
        return Err(format!("root has {comps} components, expected a tree"));
    }
    Ok(())
}
