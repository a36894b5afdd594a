//! The graph on isomorphism classes of order `n`, joining two distinct classes
//! when their direct product is ACLT.

use std::fmt::Write as _;

use serde::Serialize;

use crate::catalog::{self, Completeness};
use crate::construct::direct_product;
use crate::error::{CatalogError, GroupError};
use crate::group::FiniteGroup;
use crate::predicates::{is_aclt_group, product_aclt_expected};
use crate::spec::GroupSpec;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct XGraph {
    pub n: usize,
    pub vertices: Vec<GroupSpec>,
    /// Unordered pairs `(i, j)` with `i < j`, sorted.
    pub edges: Vec<(usize, usize)>,
    pub complete: bool,
    pub connected: bool,
}

/// Builds the graph from the product rule, without forming the products.
pub fn build(n: usize) -> Result<XGraph, CatalogError> {
    let entry = catalog::entry(n)?;
    if entry.completeness != Completeness::Complete {
        return Err(CatalogError::Incomplete(n));
    }
    let groups = entry.build()?;
    let mut edges = Vec::new();
    for i in 0..groups.len() {
        for j in i + 1..groups.len() {
            if product_aclt_expected(&groups[i], &groups[j])? {
                edges.push((i, j));
            }
        }
    }
    Ok(XGraph::new(n, entry.recipes, edges))
}

/// Whether `a × b` is ACLT, by brute force on the product.
pub fn brute_edge_check(a: &FiniteGroup, b: &FiniteGroup) -> Result<bool, GroupError> {
    Ok(is_aclt_group(&direct_product(a, b)?)?.ok)
}

impl XGraph {
    pub fn new(n: usize, vertices: Vec<GroupSpec>, mut edges: Vec<(usize, usize)>) -> Self {
        for e in &mut edges {
            *e = (e.0.min(e.1), e.0.max(e.1));
        }
        edges.sort_unstable();
        edges.dedup();
        edges.retain(|(i, j)| i != j);
        let mut graph = Self {
            n,
            vertices,
            edges,
            complete: false,
            connected: false,
        };
        graph.complete = graph.is_complete();
        graph.connected = graph.is_connected();
        graph
    }

    pub fn is_complete(&self) -> bool {
        let v = self.vertices.len();
        self.edges.len() == v * v.saturating_sub(1) / 2
    }

    pub fn is_connected(&self) -> bool {
        let v = self.vertices.len();
        if v == 0 {
            return true;
        }
        let mut seen = vec![false; v];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &(i, j) in &self.edges {
                let y = if i == x {
                    j
                } else if j == x {
                    i
                } else {
                    continue;
                };
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.binary_search(&(i.min(j), i.max(j))).is_ok()
    }

    pub fn to_dot(&self) -> String {
        let mut out = format!("graph X_{} {{\n", self.n);
        for (i, v) in self.vertices.iter().enumerate() {
            writeln!(out, "  {i} [label=\"{v}\"];").expect("write to string");
        }
        for (i, j) in &self.edges {
            writeln!(out, "  {i} -- {j};").expect("write to string");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serializes")
    }
}
