//! Named graph fixtures with vertex numbering taken verbatim from the source
//! figures, so that e.g. "root v7 of H10" is unambiguous.
//!
//! Spec strings accepted by [`fixture`]:
//! `H1`..`H10`, `P:n` (path), `G1:n:k` (path v1..v_{n-1} plus the edge
//! {v_k, v_n}), `Fig1Product` (the 9-vertex C-product example), and an
//! optional pendant-path suffix `+v:len` applied to any of the above.

use crate::error::{Error, Result};
use crate::graph::Graph;

fn h_edges(name: &str) -> Option<Vec<(usize, usize)>> {
    let h1 = vec![
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 5),
        (1, 3),
        (2, 4),
        (3, 5),
        (5, 6),
        (4, 6),
    ];
    let h3 = vec![(1, 2), (1, 3), (2, 3), (3, 5), (2, 4), (4, 5), (5, 6)];
    Some(match name {
        "H1" => h1,
        "H2" => vec![
            (1, 2),
            (1, 3),
            (2, 3),
            (1, 4),
            (2, 4),
            (4, 5),
            (4, 6),
            (2, 5),
            (3, 6),
            (5, 6),
        ],
        "H3" => h3,
        "H4" => vec![
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 3),
            (3, 4),
            (2, 5),
            (2, 6),
            (3, 5),
            (5, 6),
            (6, 7),
            (5, 7),
            (4, 6),
        ],
        "H5" => {
            let mut e = h3;
            e.push((3, 4));
            e
        }
        "H6" => {
            let mut e = h3;
            e.push((2, 5));
            e
        }
        "H7" => vec![
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 4),
            (3, 5),
            (3, 6),
            (4, 5),
            (4, 6),
        ],
        "H8" => vec![
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 3),
            (2, 4),
            (3, 5),
            (4, 5),
            (5, 6),
        ],
        "H9" => {
            let mut e = h1;
            e.push((3, 7));
            e
        }
        "H10" => vec![
            (1, 2),
            (1, 3),
            (2, 3),
            (2, 7),
            (2, 4),
            (3, 7),
            (3, 5),
            (4, 7),
            (4, 5),
            (4, 6),
        ],
        _ => return None,
    })
}

fn h_order(name: &str) -> usize {
    match name {
        "H4" | "H9" | "H10" => 7,
        _ => 6,
    }
}

/// Path graph on `n` vertices (`n >= 1`).
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::invalid("path order must be >= 1"));
    }
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
    Graph::new(n, &edges)
}

/// The diameter-(n-2) graph: path v1..v_{n-1} plus the edge {v_k, v_n}.
/// Requires n >= k+1 >= 3.
pub fn g1(n: usize, k: usize) -> Result<Graph> {
    if k + 1 < 3 || n < k + 1 {
        return Err(Error::invalid(format!("G1({n},{k}) needs n >= k+1 >= 3")));
    }
    let mut edges: Vec<(usize, usize)> = (1..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((k, n));
    Graph::new(n, &edges)
}

/// The 9-vertex C-product of two paths from the figure, flat labels
/// (j-1)*3 + i for vertex (u_i, v_j).
pub fn fig1_product() -> Graph {
    Graph::new(
        9,
        &[
            (1, 2),
            (2, 3),
            (1, 4),
            (2, 5),
            (3, 6),
            (4, 7),
            (5, 8),
            (6, 9),
            (7, 8),
            (8, 9),
            (4, 8),
            (5, 7),
            (5, 9),
            (6, 8),
        ],
    )
    .expect("figure edge list is valid")
}

/// Root vertex conventionally attached to a fixture, when the figure marks
/// one (H10's root is v7).
pub fn fixture_root(name: &str) -> Option<usize> {
    match name {
        "H10" => Some(7),
        _ => None,
    }
}

/// Resolve a fixture spec string. See the module docs for the grammar.
pub fn fixture(spec: &str) -> Result<Graph> {
    let (base, pendant) = match spec.split_once('+') {
        Some((b, p)) => (b, Some(p)),
        None => (spec, None),
    };
    let g = fixture_base(base)?;
    match pendant {
        None => Ok(g),
        Some(p) => {
            let (v, len) = p
                .split_once(':')
                .ok_or_else(|| Error::invalid(format!("pendant suffix {p:?} must be v:len")))?;
            let v: usize = v
                .parse()
                .map_err(|_| Error::invalid(format!("bad pendant vertex {v:?}")))?;
            let len: usize = len
                .parse()
                .map_err(|_| Error::invalid(format!("bad pendant length {len:?}")))?;
            g.pendant_path_extend(v, len)
        }
    }
}

fn fixture_base(spec: &str) -> Result<Graph> {
    if let Some(edges) = h_edges(spec) {
        return Graph::new(h_order(spec), &edges);
    }
    if spec == "Fig1Product" {
        return Ok(fig1_product());
    }
    if let Some(rest) = spec.strip_prefix("P:") {
        let n: usize = rest
            .parse()
            .map_err(|_| Error::invalid(format!("bad path order {rest:?}")))?;
        return path(n);
    }
    if let Some(rest) = spec.strip_prefix("G1:") {
        let (n, k) = rest
            .split_once(':')
            .ok_or_else(|| Error::invalid(format!("G1 spec {rest:?} must be G1:n:k")))?;
        let n: usize = n
            .parse()
            .map_err(|_| Error::invalid(format!("bad G1 order {n:?}")))?;
        let k: usize = k
            .parse()
            .map_err(|_| Error::invalid(format!("bad G1 attachment {k:?}")))?;
        return g1(n, k);
    }
    Err(Error::invalid(format!(
        "unknown fixture {spec:?}; expected H1..H10, P:n, G1:n:k, or Fig1Product"
    )))
}
