//! Simple undirected graphs, optionally edge-weighted, with 1-based vertex
//! labels matching the figure conventions used throughout.

use crate::error::{Error, Result};
use crate::rat::{format_rat, parse_rat, Rat};
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};
use std::collections::BTreeMap;

/// Simple undirected graph. Vertices are labeled `1..=n`; edges are stored
/// normalized `(min, max)` and sorted. When `weights` is present it runs
/// parallel to `edges` and every weight is a nonzero rational (a zero weight
/// would be edge absence).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    weights: Option<Vec<Rat>>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let edges = normalize_edges(n, edges)?;
        Ok(Graph {
            n,
            edges,
            weights: None,
        })
    }

    pub fn weighted(n: usize, edges: &[(usize, usize, Rat)]) -> Result<Graph> {
        let bare: Vec<(usize, usize)> = edges.iter().map(|&(a, b, _)| (a, b)).collect();
        let normalized = normalize_edges(n, &bare)?;
        let mut by_edge: BTreeMap<(usize, usize), Rat> = BTreeMap::new();
        for (a, b, w) in edges {
            if w.is_zero() {
                return Err(Error::invalid(format!(
                    "zero weight on edge ({a},{b}); omit the edge instead"
                )));
            }
            let key = (*a.min(b), *a.max(b));
            by_edge.insert(key, w.clone());
        }
        let weights = normalized.iter().map(|e| by_edge[e].clone()).collect();
        Ok(Graph {
            n,
            edges: normalized,
            weights: Some(weights),
        })
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            edges: Vec::new(),
            weights: None,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_weighted(&self) -> bool {
        self.weights.is_some()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v {
            return false;
        }
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).is_ok()
    }

    /// Weight of an edge; 1 for unweighted graphs, 0 for absent edges.
    pub fn weight(&self, u: usize, v: usize) -> Rat {
        if u == v {
            return Rat::zero();
        }
        let key = (u.min(v), u.max(v));
        match self.edges.binary_search(&key) {
            Err(_) => Rat::zero(),
            Ok(i) => match &self.weights {
                None => Rat::one(),
                Some(ws) => ws[i].clone(),
            },
        }
    }

    /// Weighted degree of `v` (sum of incident weights).
    pub fn degree(&self, v: usize) -> Rat {
        let mut d = Rat::zero();
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if a == v || b == v {
                d += match &self.weights {
                    None => Rat::one(),
                    Some(ws) => ws[i].clone(),
                };
            }
        }
        d
    }

    /// Unweighted degree sequence, ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for &(a, b) in &self.edges {
            deg[a - 1] += 1;
            deg[b - 1] += 1;
        }
        deg.sort_unstable();
        deg
    }

    /// 0-based adjacency lists.
    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a - 1].push(b - 1);
            adj[b - 1].push(a - 1);
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.n];
        let mut queue = std::collections::VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    /// Append a pendant path of length `len` at `v`; the new vertices are
    /// labeled `n+1..=n+len` in path order, so the distinguished pendant
    /// vertex of the result is its last label, `order()`.
    pub fn pendant_path_extend(&self, v: usize, len: usize) -> Result<Graph> {
        if v == 0 || v > self.n {
            return Err(Error::invalid(format!(
                "vertex {v} out of range 1..={}",
                self.n
            )));
        }
        if len == 0 {
            return Err(Error::invalid("pendant path length must be >= 1"));
        }
        let mut edges = self.edges.clone();
        let mut prev = v;
        for k in 1..=len {
            edges.push((prev, self.n + k));
            prev = self.n + k;
        }
        let weights = self.weights.as_ref().map(|ws| {
            let mut ws = ws.clone();
            ws.extend(std::iter::repeat_n(Rat::one(), len));
            ws
        });
        let mut g = Graph {
            n: self.n + len,
            edges,
            weights,
        };
        g.sort_edges();
        Ok(g)
    }

    fn sort_edges(&mut self) {
        match &mut self.weights {
            None => self.edges.sort_unstable(),
            Some(ws) => {
                let mut pairs: Vec<((usize, usize), Rat)> =
                    self.edges.iter().cloned().zip(ws.drain(..)).collect();
                pairs.sort_by_key(|p| p.0);
                self.edges = pairs.iter().map(|(e, _)| *e).collect();
                *ws = pairs.into_iter().map(|(_, w)| w).collect();
            }
        }
    }

    /// Relabel by `perm` (1-based: vertex `v` becomes `perm[v-1]`).
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::invalid("permutation length mismatch"));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p == 0 || p > self.n || seen[p - 1] {
                return Err(Error::invalid("not a permutation"));
            }
            seen[p - 1] = true;
        }
        let mapped: Vec<(usize, usize, Rat)> = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| {
                let w = match &self.weights {
                    None => Rat::one(),
                    Some(ws) => ws[i].clone(),
                };
                (perm[a - 1], perm[b - 1], w)
            })
            .collect();
        if self.is_weighted() {
            Graph::weighted(self.n, &mapped)
        } else {
            let bare: Vec<(usize, usize)> = mapped.iter().map(|&(a, b, _)| (a, b)).collect();
            Graph::new(self.n, &bare)
        }
    }

    /// Parse the edge-list text format: a header line `n;` followed by one
    /// edge per line, `i j` or `i j w` with `w` an exact rational.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::parse(0, "empty edge list"))?;
        let header = header.trim();
        let n: usize = header
            .strip_suffix(';')
            .ok_or_else(|| Error::parse(0, "header must be `n;`"))?
            .trim()
            .parse()
            .map_err(|_| Error::parse(0, "bad order in header"))?;
        let mut plain = Vec::new();
        let mut weighted = Vec::new();
        let mut any_weight = false;
        for line in lines {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 2 && parts.len() != 3 {
                return Err(Error::parse(0, format!("bad edge line {line:?}")));
            }
            let i: usize = parts[0]
                .parse()
                .map_err(|_| Error::parse(0, format!("bad vertex {:?}", parts[0])))?;
            let j: usize = parts[1]
                .parse()
                .map_err(|_| Error::parse(0, format!("bad vertex {:?}", parts[1])))?;
            let w = if parts.len() == 3 {
                any_weight = true;
                parse_rat(parts[2])?
            } else {
                Rat::one()
            };
            plain.push((i, j));
            weighted.push((i, j, w));
        }
        if any_weight {
            Graph::weighted(n, &weighted)
        } else {
            Graph::new(n, &plain)
        }
    }

    /// Render in the edge-list text format accepted by `parse_edge_list`.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{};\n", self.n);
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            match &self.weights {
                None => out.push_str(&format!("{a} {b}\n")),
                Some(ws) => out.push_str(&format!("{a} {b} {}\n", format_rat(&ws[i]))),
            }
        }
        out
    }
}

fn normalize_edges(n: usize, edges: &[(usize, usize)]) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::with_capacity(edges.len());
    for &(a, b) in edges {
        if a == b {
            return Err(Error::invalid(format!("self-loop at vertex {a}")));
        }
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::invalid(format!(
                "edge ({a},{b}) out of range 1..={n}"
            )));
        }
        out.push((a.min(b), a.max(b)));
    }
    out.sort_unstable();
    for w in out.windows(2) {
        if w[0] == w[1] {
            return Err(Error::invalid(format!(
                "duplicate edge ({},{})",
                w[0].0, w[0].1
            )));
        }
    }
    Ok(out)
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Graph", 3)?;
        st.serialize_field("order", &self.n)?;
        st.serialize_field("edges", &self.edges)?;
        let weights: Option<Vec<String>> = self
            .weights
            .as_ref()
            .map(|ws| ws.iter().map(format_rat).collect());
        st.serialize_field("weights", &weights)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Graph, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            order: usize,
            edges: Vec<(usize, usize)>,
            #[serde(default)]
            weights: Option<Vec<String>>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let g = match raw.weights {
            None => Graph::new(raw.order, &raw.edges),
            Some(ws) => {
                if ws.len() != raw.edges.len() {
                    return Err(serde::de::Error::custom("weights/edges length mismatch"));
                }
                let trip: std::result::Result<Vec<(usize, usize, Rat)>, crate::Error> = raw
                    .edges
                    .iter()
                    .zip(&ws)
                    .map(|(&(a, b), w)| Ok((a, b, parse_rat(w)?)))
                    .collect();
                match trip {
                    Ok(t) => Graph::weighted(raw.order, &t),
                    Err(e) => return Err(serde::de::Error::custom(e.to_string())),
                }
            }
        };
        g.map_err(|e| serde::de::Error::custom(e.to_string()))
    }
}
