//! Reference complexes, stored as JSON under `fixtures/` and checked
//! against scripts that rebuild them.
//!
//! * `rp2-minimal`, `torus-minimal`: the six- and seven-vertex
//!   triangulations of the projective plane and the torus.
//! * `rp2-pair`, `torus-pair`: two stellar subdivisions of each that have
//!   isomorphic facet-ridge graphs but are not isomorphic.
//! * `subword`: small subword complexes with known facets.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::frgraph::{self, GraphIso, Reconstruction};
use crate::io::{IoError, LabelStyle};
use crate::simplicial::{Face, SimplicialComplex};
use crate::subword::SubwordComplex;

pub const NAMES: [&str; 5] = [
    "rp2-minimal",
    "torus-minimal",
    "rp2-pair",
    "torus-pair",
    "subword",
];

const RP2_MINIMAL: &str = include_str!("../fixtures/rp2-minimal.json");
const TORUS_MINIMAL: &str = include_str!("../fixtures/torus-minimal.json");
const RP2_PAIR: &str = include_str!("../fixtures/rp2-pair.json");
const TORUS_PAIR: &str = include_str!("../fixtures/torus-pair.json");
const SUBWORD: &str = include_str!("../fixtures/subword.json");

const STYLE: LabelStyle = LabelStyle::Alphanumeric;

fn face(name: &str) -> Face {
    STYLE
        .parse_face_name(name)
        .expect("fixture labels are valid")
}

#[derive(Debug, Clone, Deserialize)]
pub struct SurfaceExpected {
    pub f_vector: Vec<usize>,
    pub euler_characteristic: i64,
    pub gf2_betti: Vec<usize>,
    pub simplicial_automorphisms: u64,
    pub graph_automorphisms: u64,
}

#[derive(Debug, Clone, Deserialize)]
struct SurfaceFile {
    name: String,
    description: String,
    vertices: Vec<String>,
    facets: Vec<Vec<String>>,
    expected: SurfaceExpected,
}

#[derive(Debug, Clone)]
pub struct SurfaceFixture {
    pub name: String,
    pub description: String,
    pub complex: SimplicialComplex,
    pub expected: SurfaceExpected,
}

fn load_surface(text: &str) -> SurfaceFixture {
    let file: SurfaceFile = serde_json::from_str(text).expect("fixture JSON is valid");
    let json = crate::io::ComplexJson {
        vertices: file.vertices,
        facets: file.facets,
        subword: None,
    };
    SurfaceFixture {
        name: file.name,
        description: file.description,
        complex: json.to_complex().expect("fixture complex is valid"),
        expected: file.expected,
    }
}

pub fn rp2_minimal_fixture() -> SurfaceFixture {
    load_surface(RP2_MINIMAL)
}

pub fn torus_minimal_fixture() -> SurfaceFixture {
    load_surface(TORUS_MINIMAL)
}

pub fn rp2_minimal() -> SimplicialComplex {
    rp2_minimal_fixture().complex
}

pub fn torus_minimal() -> SimplicialComplex {
    torus_minimal_fixture().complex
}

#[derive(Debug, Clone, Deserialize)]
struct ListFile {
    label: String,
    last_subdivision: (String, String),
    facets: Vec<String>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct PairExpected {
    /// Vertex of highest degree in the source and its degree.
    pub source_max_degree: (String, usize),
    pub target_max_degree: usize,
    pub row_pairing_is_isomorphism: bool,
    pub graph_isomorphisms: usize,
    pub witness: Vec<String>,
    pub empty_image: Vec<String>,
    pub cycles: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Deserialize)]
struct PairFile {
    name: String,
    description: String,
    base: String,
    common_subdivisions: Vec<(String, String)>,
    lists: Vec<ListFile>,
    source: String,
    row_pairing: Vec<(String, String)>,
    correspondence: Vec<(String, String)>,
    expected: PairExpected,
}

/// One complex of a pair, with its facets in listed order.
#[derive(Debug, Clone)]
pub struct ListedComplex {
    pub label: String,
    pub listed: Vec<Face>,
    pub complex: SimplicialComplex,
    /// Facet subdivided last, and the new vertex.
    pub last_subdivision: (Face, u32),
}

#[derive(Debug, Clone)]
pub struct PairFixture {
    pub name: String,
    pub description: String,
    pub base: SimplicialComplex,
    pub common_subdivisions: Vec<(Face, u32)>,
    /// The complex the face map starts from (the one with the busiest vertex).
    pub source: ListedComplex,
    pub target: ListedComplex,
    /// Pairing of the two lists row by row, as facet-ridge graph node maps
    /// from source to target. `None` if it is not a bijection.
    pub row_pairing: Option<GraphIso>,
    /// The correspondence used for the reconstruction check.
    pub correspondence: GraphIso,
    pub expected: PairExpected,
}

fn node_map(
    source: &SimplicialComplex,
    target: &SimplicialComplex,
    pairs: &[(Face, Face)],
) -> Option<GraphIso> {
    let mut map = vec![usize::MAX; source.facet_count()];
    for &(a, b) in pairs {
        let i = source.facets().binary_search(&a).ok()?;
        let j = target.facets().binary_search(&b).ok()?;
        map[i] = j;
    }
    let mut seen = map.clone();
    seen.sort_unstable();
    (seen == (0..map.len()).collect::<Vec<_>>()).then_some(GraphIso { map })
}

fn load_pair(text: &str) -> PairFixture {
    let file: PairFile = serde_json::from_str(text).expect("fixture JSON is valid");
    let base = match file.base.as_str() {
        "rp2-minimal" => rp2_minimal(),
        "torus-minimal" => torus_minimal(),
        other => panic!("unknown base fixture {other}"),
    };
    let step = |(f, v): &(String, String)| (face(f), STYLE.parse(v).expect("valid label"));
    let listed: Vec<ListedComplex> = file
        .lists
        .iter()
        .map(|l| {
            let listed: Vec<Face> = l.facets.iter().map(|f| face(f)).collect();
            ListedComplex {
                label: l.label.clone(),
                complex: SimplicialComplex::from_facets(listed.iter().copied()),
                listed,
                last_subdivision: step(&l.last_subdivision),
            }
        })
        .collect();
    let source_first = listed[0].label == file.source;
    let [first, second]: [ListedComplex; 2] = listed.try_into().expect("two lists");
    let (source, target) = if source_first {
        (first, second)
    } else {
        (second, first)
    };
    // Rows are (first list, second list); orient them source -> target.
    let orient = |rows: &[(String, String)]| -> Vec<(Face, Face)> {
        rows.iter()
            .map(|(a, b)| {
                let (a, b) = (face(a), face(b));
                if source_first {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect()
    };
    let row_pairing = node_map(&source.complex, &target.complex, &orient(&file.row_pairing));
    let correspondence = node_map(
        &source.complex,
        &target.complex,
        &orient(&file.correspondence),
    )
    .expect("correspondence is a bijection of facets");
    PairFixture {
        name: file.name,
        description: file.description,
        base,
        common_subdivisions: file.common_subdivisions.iter().map(step).collect(),
        source,
        target,
        row_pairing,
        correspondence,
        expected: file.expected,
    }
}

pub fn rp2_pair() -> PairFixture {
    load_pair(RP2_PAIR)
}

pub fn torus_pair() -> PairFixture {
    load_pair(TORUS_PAIR)
}

impl PairFixture {
    /// Rebuilds one complex of the pair by stellar subdivisions of the base.
    pub fn replay(&self, last: (Face, u32)) -> SimplicialComplex {
        self.common_subdivisions
            .iter()
            .chain(std::iter::once(&last))
            .fold(self.base.clone(), |c, &(f, v)| {
                c.stellar_subdivide(f, v)
                    .expect("subdivision script is valid")
            })
    }

    /// The complex before the last subdivision, shared by both.
    pub fn common_ancestor(&self) -> SimplicialComplex {
        self.common_subdivisions
            .iter()
            .fold(self.base.clone(), |c, &(f, v)| {
                c.stellar_subdivide(f, v)
                    .expect("subdivision script is valid")
            })
    }
}

#[derive(Debug, Clone, Deserialize)]
pub struct SubwordFixture {
    pub name: String,
    #[serde(rename = "type")]
    pub coxeter_type: String,
    pub word: Vec<usize>,
    pub pi_word: Vec<usize>,
    pub spherical: bool,
    pub facets: Vec<Vec<String>>,
}

impl SubwordFixture {
    pub fn build(&self) -> SubwordComplex {
        SubwordComplex::from_words(&self.coxeter_type, &self.word, &self.pi_word)
            .expect("fixture words are valid")
    }

    pub fn expected_complex(&self) -> SimplicialComplex {
        SimplicialComplex::from_facets(
            self.facets
                .iter()
                .map(|f| LabelStyle::Decimal.parse_face(f).expect("valid labels")),
        )
    }
}

#[derive(Deserialize)]
struct SubwordFile {
    complexes: Vec<SubwordFixture>,
}

pub fn subword_fixtures() -> Vec<SubwordFixture> {
    serde_json::from_str::<SubwordFile>(SUBWORD)
        .expect("fixture JSON is valid")
        .complexes
}

pub fn subword_fixture(name: &str) -> Option<SubwordFixture> {
    subword_fixtures().into_iter().find(|f| f.name == name)
}

/// The two balls with the same facet-ridge graph (a path on three nodes)
/// but different dimensions.
pub fn ball_pair() -> (SubwordComplex, SubwordComplex) {
    let get = |n| subword_fixture(n).expect("ball fixtures exist").build();
    (get("path-ball"), get("triangle-path-ball"))
}

// ---------------------------------------------------------------------------
// Verification

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckLine {
    pub check: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixtureReport {
    pub fixture: String,
    pub checks: Vec<CheckLine>,
    /// Discrepancies in the stored data that were resolved rather than failed.
    pub notes: Vec<String>,
}

impl FixtureReport {
    fn new(name: &str) -> Self {
        FixtureReport {
            fixture: name.to_string(),
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, check: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(CheckLine {
            check: check.to_string(),
            passed,
            detail: detail.into(),
        });
    }

    fn equal<T: PartialEq + std::fmt::Debug>(&mut self, check: &str, got: T, want: T) {
        let passed = got == want;
        self.check(check, passed, format!("got {got:?}, expected {want:?}"));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

pub fn verify(name: &str) -> Result<FixtureReport, IoError> {
    match name {
        "rp2-minimal" => Ok(verify_surface(&rp2_minimal_fixture())),
        "torus-minimal" => Ok(verify_surface(&torus_minimal_fixture())),
        "rp2-pair" => Ok(verify_pair(&rp2_pair())),
        "torus-pair" => Ok(verify_pair(&torus_pair())),
        "subword" => Ok(verify_subword()),
        other => Err(IoError::BadLabel(format!("unknown fixture {other}"))),
    }
}

fn verify_surface(fx: &SurfaceFixture) -> FixtureReport {
    let mut r = FixtureReport::new(&fx.name);
    let c = &fx.complex;
    let e = &fx.expected;
    r.equal("f-vector", c.f_vector(), e.f_vector.clone());
    r.equal(
        "euler characteristic",
        c.euler_characteristic(),
        e.euler_characteristic,
    );
    r.equal("gf2 betti numbers", c.gf2_homology(), e.gf2_betti.clone());
    r.equal("pseudomanifold", c.is_pseudomanifold().ok(), Some(true));
    r.equal(
        "simplicial automorphisms",
        frgraph::simplicial_automorphism_group_order(c).ok(),
        Some(e.simplicial_automorphisms),
    );
    let fr = c.facet_ridge_graph().expect("surfaces are pure");
    r.equal(
        "graph automorphisms",
        frgraph::automorphism_group_order(&fr.graph),
        e.graph_automorphisms,
    );
    r
}

fn verify_pair(fx: &PairFixture) -> FixtureReport {
    let mut r = FixtureReport::new(&fx.name);
    let (a, b) = (&fx.source.complex, &fx.target.complex);
    for side in [&fx.source, &fx.target] {
        let replayed = fx.replay(side.last_subdivision);
        r.equal(
            &format!("{} list equals replay", side.label),
            &replayed,
            &side.complex,
        );
        r.equal(
            &format!("{} list has no repeats", side.label),
            side.listed.len(),
            side.complex.facet_count(),
        );
        r.equal(
            &format!("{} gf2 betti numbers", side.label),
            side.complex.gf2_homology(),
            fx.base.gf2_homology(),
        );
    }
    let ga = a.facet_ridge_graph().expect("pure").graph;
    let gb = b.facet_ridge_graph().expect("pure").graph;
    let row_ok = fx
        .row_pairing
        .as_ref()
        .is_some_and(|p| p.is_isomorphism(&ga, &gb));
    r.equal(
        "row pairing is a graph isomorphism",
        row_ok,
        fx.expected.row_pairing_is_isomorphism,
    );
    if !row_ok {
        if let Some(rows) = &fx.row_pairing {
            let changed: Vec<String> = (0..rows.map.len())
                .filter(|&i| rows.map[i] != fx.correspondence.map[i])
                .map(|i| {
                    format!(
                        "{} -> {} (rows pair it with {})",
                        STYLE.face_name(a.facets()[i]),
                        STYLE.face_name(b.facets()[fx.correspondence.map[i]]),
                        STYLE.face_name(b.facets()[rows.map[i]]),
                    )
                })
                .collect();
            r.notes.push(format!(
                "the row-by-row pairing of the lists is not a facet-ridge graph isomorphism; \
                 the stored correspondence differs at: {}",
                changed.join("; ")
            ));
        }
    }
    r.equal(
        "correspondence is a graph isomorphism",
        fx.correspondence.is_isomorphism(&ga, &gb),
        true,
    );
    r.equal(
        "number of graph isomorphisms",
        frgraph::isomorphisms(&ga, &gb).len(),
        fx.expected.graph_isomorphisms,
    );
    let (v, d) = &fx.expected.source_max_degree;
    let v = STYLE.parse(v).expect("valid label");
    r.equal(
        "busiest vertex of the source",
        frgraph::max_vertex_degree(a),
        Some((v, *d)),
    );
    r.equal(
        "largest vertex degree of the target",
        frgraph::max_vertex_degree(b).map(|x| x.1),
        Some(fx.expected.target_max_degree),
    );
    r.equal(
        "complexes are not isomorphic",
        frgraph::find_simplicial_isomorphism(a, b).is_none(),
        true,
    );
    match frgraph::verify_reconstruction(&fx.correspondence, a, b) {
        Ok(Reconstruction::Failure {
            witness, degraded, ..
        }) => {
            let want = STYLE
                .parse_face(&fx.expected.witness)
                .expect("valid labels");
            r.equal("reconstruction witness", witness, want);
            let empty = STYLE
                .parse_face(&fx.expected.empty_image)
                .expect("valid labels");
            let image = degraded.iter().find(|d| d.face == empty).map(|d| d.image);
            r.equal(
                &format!("g({}) is empty", STYLE.face_name(empty)),
                image,
                Some(Face::EMPTY),
            );
        }
        other => r.check("reconstruction fails", false, format!("{other:?}")),
    }
    for cycle in &fx.expected.cycles {
        let edges: Vec<Face> = cycle.iter().map(|e| face(e)).collect();
        r.equal(
            &format!("cycle {} lies in the source", cycle.join(" ")),
            edges.iter().all(|&e| a.contains_face(e)),
            true,
        );
    }
    let (c1, c2) = (&fx.expected.cycles[0], &fx.expected.cycles[1]);
    let verts = |c: &Vec<String>| c.iter().fold(Face::EMPTY, |acc, e| acc.union(face(e)));
    let shared_edges = c1.iter().filter(|e| c2.contains(e)).count();
    r.equal(
        "cycles share one vertex and no edge",
        (verts(c1).intersection(verts(c2)).len(), shared_edges),
        (1, 0),
    );
    let ancestor = fx.common_ancestor();
    for side in [&fx.source, &fx.target] {
        let (f, v) = side.last_subdivision;
        let before = ancestor.facet_ridge_graph().expect("pure");
        let dim = ancestor.dim().expect("non-empty") as usize;
        let truncated = before.truncate_vertex(f, dim).expect("degree matches");
        let after = ancestor
            .stellar_subdivide(f, v)
            .expect("valid")
            .facet_ridge_graph()
            .expect("pure");
        r.equal(
            &format!("{} subdivision matches vertex truncation", side.label),
            frgraph::find_isomorphism(&truncated, &after.graph).is_some(),
            true,
        );
    }
    r
}

fn verify_subword() -> FixtureReport {
    let mut r = FixtureReport::new("subword");
    for fx in subword_fixtures() {
        let sc = fx.build();
        r.equal(
            &format!("{} facets", fx.name),
            sc.complex(),
            &fx.expected_complex(),
        );
        r.equal(
            &format!("{} spherical", fx.name),
            sc.is_spherical().ok(),
            Some(fx.spherical),
        );
    }
    let (x, y) = ball_pair();
    let gx = x.complex().facet_ridge_graph().expect("pure").graph;
    let gy = y.complex().facet_ridge_graph().expect("pure").graph;
    r.equal(
        "balls share a facet-ridge graph",
        frgraph::find_isomorphism(&gx, &gy).is_some(),
        true,
    );
    r.equal(
        "balls are not isomorphic",
        frgraph::find_simplicial_isomorphism(x.complex(), y.complex()).is_none(),
        true,
    );
    r
}

/// Number of facets through each vertex, keyed by label.
pub fn labelled_degrees(complex: &SimplicialComplex) -> BTreeMap<String, usize> {
    complex
        .degree_profile()
        .into_iter()
        .map(|(v, d)| (STYLE.label(v), d))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_verifies() {
        for name in NAMES {
            let report = verify(name).unwrap();
            for c in &report.checks {
                assert!(c.passed, "{name}: {} ({})", c.check, c.detail);
            }
        }
    }

    #[test]
    fn rp2_rows_need_one_swap() {
        let report = verify("rp2-pair").unwrap();
        assert_eq!(report.notes.len(), 1);
        assert!(report.notes[0].contains("24a"));
        assert!(verify("torus-pair").unwrap().notes.is_empty());
    }

    #[test]
    fn listed_orders_are_kept() {
        let fx = rp2_pair();
        assert_eq!(fx.source.label, "blue");
        assert_eq!(fx.source.listed[0], Face::new([1, 2, 5]));
        assert_eq!(fx.target.listed[0], Face::new([1, 3, 4]));
        assert_eq!(fx.source.listed.len(), 18);
        assert_eq!(torus_pair().source.listed.len(), 22);
    }

    #[test]
    fn degrees_by_label() {
        let fx = rp2_pair();
        assert_eq!(labelled_degrees(&fx.source.complex)["4"], 9);
        assert_eq!(labelled_degrees(&fx.target.complex)["a"], 3);
    }
}
