//! Census of connected graphs by order: built-in isomorphism-free generation
//! up to order 7, graph6 ingestion beyond, classification into the
//! separable / controllable / Wronskian-vertex counts, and cospectral-class
//! grouping.

use crate::analysis::wronskian_vertex;
use crate::canon::canonical_form;
use crate::control::is_controllable_graph;
use crate::error::{Error, Result};
use crate::family::{charpoly_m, MatrixKind};
use crate::graph::Graph;
use crate::poly::Poly;
use rayon::prelude::*;
use std::collections::{BTreeMap, HashSet};

pub const GENERATOR_MAX_ORDER: usize = 7;

/// One row of the census table.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CensusRow {
    pub order: usize,
    /// Connected graphs, one per isomorphism class.
    pub total: usize,
    /// A-separable (squarefree charpoly) among them.
    pub separable: usize,
    /// Controllable (connected with full walk-matrix rank).
    pub controllable: usize,
    /// Having at least one Wronskian vertex (order-1 convention: none).
    pub wronskian: usize,
    /// Controllable and having a Wronskian vertex.
    pub controllable_wronskian: usize,
}

impl CensusRow {
    pub const TSV_HEADER: &'static str =
        "order\ttotal\tseparable\tcontrollable\twronskian\tcontrollable_wronskian";

    pub fn to_tsv(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.order,
            self.total,
            self.separable,
            self.controllable,
            self.wronskian,
            self.controllable_wronskian
        )
    }

    /// Containment sanity of the five counts.
    pub fn invariants_hold(&self) -> bool {
        self.controllable <= self.separable
            && self.separable <= self.total
            && self.controllable_wronskian <= self.controllable.min(self.wronskian)
    }
}

/// Upper-triangle bitmask representation used by the generator.
fn mask_to_graph(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 2..=n {
        for i in 1..j {
            if mask >> idx & 1 == 1 {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Graph::new(n, &edges).expect("mask edges are valid")
}

/// Canonical bitmasks of ALL graphs (connected or not) of order n, one per
/// isomorphism class, by vertex augmentation from order n-1.
fn all_classes(n: usize) -> Vec<u64> {
    let mut reps: Vec<u64> = vec![0]; // the single graph of order 1
    for k in 2..=n {
        let mut seen: HashSet<u64> = HashSet::new();
        let tri = (k - 1) * (k - 2) / 2;
        for &parent in &reps {
            for subset in 0u64..(1 << (k - 1)) {
                let mask = parent | (subset << tri);
                let g = mask_to_graph(k, mask);
                let key = canonical_form(&g).expect("unweighted, small").bit_key();
                seen.insert(key);
            }
        }
        let mut next: Vec<u64> = seen.into_iter().collect();
        next.sort_unstable();
        reps = next;
    }
    reps
}

/// One representative per isomorphism class of connected graphs of order n.
/// The built-in generator stops at order 7; larger orders must be ingested
/// from a graph6 corpus.
pub fn generate_connected(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::invalid("order must be >= 1"));
    }
    if n > GENERATOR_MAX_ORDER {
        return Err(Error::invalid(format!(
            "built-in generation stops at order {GENERATOR_MAX_ORDER}; \
             ingest a graph6 corpus (census --graph6 FILE) for order {n}"
        )));
    }
    Ok(all_classes(n)
        .into_iter()
        .map(|m| mask_to_graph(n, m))
        .filter(Graph::is_connected)
        .collect())
}

struct Flags {
    separable: bool,
    controllable: bool,
    wronskian: bool,
}

fn classify(g: &Graph, kind: &MatrixKind) -> Result<Flags> {
    let phi = charpoly_m(g, kind);
    let separable = phi.is_squarefree()?;
    let controllable = is_controllable_graph(g, kind)?.controllable;
    let mut wronskian = false;
    if g.order() >= 2 {
        for u in 1..=g.order() {
            if wronskian_vertex(g, kind, u)?.is_wronskian {
                wronskian = true;
                break;
            }
        }
    }
    Ok(Flags {
        separable,
        controllable,
        wronskian,
    })
}

fn run_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    if jobs <= 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .map_err(|e| Error::invalid(format!("thread pool: {e}")))?;
        Ok(pool.install(f))
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::invalid(format!("thread pool: {e}")))?;
        Ok(pool.install(f))
    }
}

/// Classify a corpus (one representative per class, uniform order);
/// disconnected members are skipped and do not count toward any column.
pub fn census_graphs(graphs: &[Graph], kind: &MatrixKind, jobs: usize) -> Result<CensusRow> {
    let order = match graphs.first() {
        None => return Err(Error::invalid("empty census source")),
        Some(g) => g.order(),
    };
    if graphs.iter().any(|g| g.order() != order) {
        return Err(Error::invalid("census source mixes graph orders"));
    }
    if graphs.iter().any(Graph::is_weighted) {
        return Err(Error::invalid("the census is defined for unweighted graphs"));
    }
    let kind = kind.clone();
    let counts: Result<(usize, usize, usize, usize, usize)> = run_pool(jobs, move || {
        graphs
            .par_iter()
            .filter(|g| g.is_connected())
            .map(|g| {
                let f = classify(g, &kind)?;
                Ok((
                    1usize,
                    usize::from(f.separable),
                    usize::from(f.controllable),
                    usize::from(f.wronskian),
                    usize::from(f.controllable && f.wronskian),
                ))
            })
            .try_reduce(
                || (0, 0, 0, 0, 0),
                |a, b| Ok((a.0 + b.0, a.1 + b.1, a.2 + b.2, a.3 + b.3, a.4 + b.4)),
            )
    })?;
    let (total, separable, controllable, wronskian, controllable_wronskian) = counts?;
    let row = CensusRow {
        order,
        total,
        separable,
        controllable,
        wronskian,
        controllable_wronskian,
    };
    if !row.invariants_hold() {
        return Err(Error::invariant(format!(
            "census containments violated: {row:?}"
        )));
    }
    Ok(row)
}

/// Census of the built-in generator output at order n.
pub fn census_order(n: usize, kind: &MatrixKind, jobs: usize) -> Result<CensusRow> {
    let graphs = generate_connected(n)?;
    census_graphs(&graphs, kind, jobs)
}

/// Census of a graph6 corpus (text, one graph per line).
pub fn census_graph6(text: &str, kind: &MatrixKind, jobs: usize) -> Result<CensusRow> {
    let graphs = crate::graph6::parse_graph6_lines(text)?;
    census_graphs(&graphs, kind, jobs)
}

/// True iff every controllable graph in the source has a Wronskian vertex;
/// counterexample indices otherwise. Uses the raw gcd criterion, so the
/// single vertex of K1 qualifies here even though the census column reports
/// 0 at order 1 by the table convention.
pub fn subset_observation(graphs: &[Graph], kind: &MatrixKind) -> Result<(bool, Vec<usize>)> {
    let mut counterexamples = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        if !g.is_connected() {
            continue;
        }
        if !is_controllable_graph(g, kind)?.controllable {
            continue;
        }
        let mut has = false;
        for u in 1..=g.order() {
            if wronskian_vertex(g, kind, u)?.gcd.is_one() {
                has = true;
                break;
            }
        }
        if !has {
            counterexamples.push(i);
        }
    }
    Ok((counterexamples.is_empty(), counterexamples))
}

/// Partition the source by exact charpoly equality. Classes come out in
/// coefficient order; members keep source order. Singleton classes are
/// spectrum-unique within the source.
pub fn cospectral_classes(graphs: &[Graph], kind: &MatrixKind) -> Vec<(Poly, Vec<usize>)> {
    let mut by_poly: BTreeMap<Poly, Vec<usize>> = BTreeMap::new();
    for (i, g) in graphs.iter().enumerate() {
        by_poly.entry(charpoly_m(g, kind)).or_default().push(i);
    }
    by_poly.into_iter().collect()
}
