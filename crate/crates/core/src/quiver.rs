//! McKay graphs and reference ADE diagrams.
//!
//! Graphs are undirected multigraphs given by a symmetric adjacency matrix
//! with zero diagonal. Vertices may carry positive integer marks (irrep
//! dimensions, or the coefficients of the highest root plus the affine
//! node on an extended diagram).

use std::fmt::Write as _;

use crate::ade::{AdeType, Family};
use crate::character::{standard_character, tensor_matrix, CharacterTable};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adjacency: Vec<Vec<u32>>,
    marks: Option<Vec<u32>>,
    trivial: Option<usize>,
}

impl Graph {
    pub fn new(labels: Vec<String>, adjacency: Vec<Vec<u32>>) -> Result<Self> {
        let n = labels.len();
        if adjacency.len() != n || adjacency.iter().any(|r| r.len() != n) {
            return Err(Error::usage("adjacency matrix does not match vertex count"));
        }
        for i in 0..n {
            if adjacency[i][i] != 0 {
                return Err(Error::usage(format!("loop at vertex {}", labels[i])));
            }
            for j in 0..i {
                if adjacency[i][j] != adjacency[j][i] {
                    return Err(Error::usage(format!(
                        "asymmetric adjacency between {} and {}",
                        labels[i], labels[j]
                    )));
                }
            }
        }
        Ok(Graph {
            labels,
            adjacency,
            marks: None,
            trivial: None,
        })
    }

    pub fn with_marks(mut self, marks: Vec<u32>) -> Result<Self> {
        if marks.len() != self.len() {
            return Err(Error::usage("one mark per vertex required"));
        }
        self.marks = Some(marks);
        Ok(self)
    }

    pub fn with_trivial(mut self, vertex: usize) -> Result<Self> {
        if vertex >= self.len() {
            return Err(Error::usage("trivial vertex out of range"));
        }
        self.trivial = Some(vertex);
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn adjacency(&self) -> &[Vec<u32>] {
        &self.adjacency
    }

    pub fn marks(&self) -> Option<&[u32]> {
        self.marks.as_deref()
    }

    pub fn trivial_vertex(&self) -> Option<usize> {
        self.trivial
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.adjacency[v].iter().sum()
    }

    /// Number of edges counted with multiplicity.
    pub fn edge_count(&self) -> u32 {
        (0..self.len()).map(|v| self.degree(v)).sum::<u32>() / 2
    }

    pub fn is_connected(&self) -> bool {
        if self.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for (w, &m) in self.adjacency[v].iter().enumerate() {
                if m > 0 && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn induced(&self, keep: &[usize]) -> Graph {
        Graph {
            labels: keep.iter().map(|&i| self.labels[i].clone()).collect(),
            adjacency: keep
                .iter()
                .map(|&i| keep.iter().map(|&j| self.adjacency[i][j]).collect())
                .collect(),
            marks: self
                .marks
                .as_ref()
                .map(|m| keep.iter().map(|&i| m[i]).collect()),
            trivial: None,
        }
    }

    /// Deterministic DOT rendering. Vertices are `v0, v1, ...` in order with
    /// label `name(mark)` (or `name` when unmarked); each edge of
    /// multiplicity `k` is written `k` times, pairs in ascending order.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        writeln!(out, "graph \"{name}\" {{").unwrap();
        for (i, label) in self.labels.iter().enumerate() {
            match &self.marks {
                Some(m) => writeln!(out, "  v{i} [label=\"{label}({})\"];", m[i]).unwrap(),
                None => writeln!(out, "  v{i} [label=\"{label}\"];").unwrap(),
            }
        }
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                for _ in 0..self.adjacency[i][j] {
                    writeln!(out, "  v{i} -- v{j};").unwrap();
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

/// The extended McKay graph: one vertex per irrep, `a[alpha][beta]` edges,
/// marks equal to the irrep dimensions and the trivial irrep marked.
pub fn mckay_graph(table: &CharacterTable) -> Result<Graph> {
    let standard = standard_character(table.classes());
    let a = tensor_matrix(table, &standard)?;
    let n = a.len();
    for i in 0..n {
        for j in 0..n {
            if a[i][j] != a[j][i] {
                return Err(Error::internal(
                    "mckay_graph",
                    format!("a[{i}][{j}] = {} but a[{j}][{i}] = {}", a[i][j], a[j][i]),
                ));
            }
        }
    }
    let adjacency = a
        .into_iter()
        .map(|row| row.into_iter().map(|x| x as u32).collect())
        .collect();
    let labels = (0..n).map(|i| format!("V{i}")).collect();
    let graph = Graph::new(labels, adjacency)
        .map_err(|e| Error::internal("mckay_graph", e.to_string()))?;
    graph.with_marks(table.dimensions())?.with_trivial(table.trivial_index())
}

/// Removes the vertex of the trivial representation.
pub fn delete_trivial_vertex(extended: &Graph) -> Result<Graph> {
    let t = extended
        .trivial
        .ok_or_else(|| Error::usage("graph has no vertex marked as the trivial irrep"))?;
    let keep: Vec<usize> = (0..extended.len()).filter(|&v| v != t).collect();
    Ok(extended.induced(&keep))
}

/// Breadth-first order from vertex 0, neighbours ascending, one component
/// after another.
fn search_order(g: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.len());
    let mut seen = vec![false; g.len()];
    for root in 0..g.len() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for v in 0..g.len() {
                if g.adjacency[u][v] > 0 && !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    order
}

/// Finds a bijection `map` with `map[v]` the image in `b` of vertex `v` of
/// `a`, preserving edge multiplicities (and marks when both graphs carry
/// them). Vertices of `a` are matched in breadth-first order with candidates
/// tried in ascending order, so the result is deterministic.
pub fn graph_isomorphic(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    if a.len() != b.len() || a.edge_count() != b.edge_count() {
        return None;
    }
    let marks_match = |u: usize, v: usize| match (&a.marks, &b.marks) {
        (Some(ma), Some(mb)) => ma[u] == mb[v],
        _ => true,
    };
    let candidates: Vec<Vec<usize>> = (0..a.len())
        .map(|u| {
            (0..b.len())
                .filter(|&v| a.degree(u) == b.degree(v) && marks_match(u, v))
                .collect()
        })
        .collect();
    struct Search<'g> {
        a: &'g Graph,
        b: &'g Graph,
        order: Vec<usize>,
        candidates: Vec<Vec<usize>>,
        map: Vec<Option<usize>>,
        used: Vec<bool>,
    }
    impl Search<'_> {
        fn extend(&mut self, depth: usize) -> bool {
            let Some(&u) = self.order.get(depth) else {
                return true;
            };
            for i in 0..self.candidates[u].len() {
                let v = self.candidates[u][i];
                if self.used[v] {
                    continue;
                }
                let consistent = self.order[..depth]
                    .iter()
                    .all(|&w| self.a.adjacency[u][w] == self.b.adjacency[v][self.map[w].unwrap()]);
                if consistent {
                    self.map[u] = Some(v);
                    self.used[v] = true;
                    if self.extend(depth + 1) {
                        return true;
                    }
                    self.used[v] = false;
                    self.map[u] = None;
                }
            }
            false
        }
    }
    let mut search = Search {
        a,
        b,
        order: search_order(a),
        candidates,
        map: vec![None; a.len()],
        used: vec![false; b.len()],
    };
    search
        .extend(0)
        .then(|| search.map.into_iter().map(|v| v.expect("complete map")).collect())
}

/// Checks `A * marks = 2 * marks` exactly.
pub fn affine_null_check(extended: &Graph) -> bool {
    let Some(marks) = &extended.marks else {
        return false;
    };
    extended.adjacency.iter().zip(marks).all(|(row, &m)| {
        let s: u64 = row.iter().zip(marks).map(|(&a, &d)| a as u64 * d as u64).sum();
        s == 2 * m as u64
    })
}

/// A reference simply laced Dynkin diagram, plain or extended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynkinDiagram {
    pub ade: AdeType,
    pub extended: bool,
    pub graph: Graph,
}

impl DynkinDiagram {
    pub fn marks(&self) -> &[u32] {
        self.graph.marks().expect("reference diagrams carry marks")
    }

    /// The plain diagram. Vertices run left to right along the layout with
    /// the branch vertex last; marks are the highest-root coefficients.
    pub fn reference(ade: AdeType) -> Self {
        let ext = Self::extended(ade);
        DynkinDiagram {
            ade,
            extended: false,
            graph: ext.graph.induced(&(1..ext.graph.len()).collect::<Vec<_>>()),
        }
    }

    /// The extended diagram: vertex 0 is the affine node (mark 1), followed
    /// by the vertices of [`DynkinDiagram::reference`] in the same order.
    pub fn extended(ade: AdeType) -> Self {
        let n = ade.rank() as usize;
        // (marks of the plain vertices, plain edges, neighbours of the affine node)
        let (marks, edges, affine): (Vec<u32>, Vec<(usize, usize)>, Vec<usize>) = match ade.family() {
            Family::A => {
                let edges = (0..n - 1).map(|i| (i, i + 1)).collect();
                (vec![1; n], edges, vec![0, n - 1])
            }
            Family::D => {
                // chain c_0..c_{n-4}, leaves l1 = n-3, l2 = n-2, branch = n-1
                let chain = n - 3;
                let branch = n - 1;
                let mut edges: Vec<(usize, usize)> = (0..chain - 1).map(|i| (i, i + 1)).collect();
                edges.extend([(chain - 1, branch), (n - 3, branch), (n - 2, branch)]);
                let mut marks = vec![2; n];
                marks[0] = 1;
                marks[n - 3] = 1;
                marks[n - 2] = 1;
                let attach = if chain >= 2 { 1 } else { branch };
                (marks, edges, vec![attach])
            }
            Family::E6 | Family::E7 | Family::E8 => {
                let order = e_layout(n);
                let pos = |label: usize| order.iter().position(|&l| l == label).unwrap();
                let mut bourbaki = vec![(1, 3), (3, 4), (4, 5), (2, 4)];
                bourbaki.extend((5..n).map(|i| (i, i + 1)));
                let highest: &[u32] = match ade.family() {
                    Family::E6 => &[1, 2, 2, 3, 2, 1],
                    Family::E7 => &[2, 2, 3, 4, 3, 2, 1],
                    _ => &[2, 3, 4, 6, 5, 4, 3, 2],
                };
                let affine_label = match ade.family() {
                    Family::E6 => 2,
                    Family::E7 => 1,
                    _ => 8,
                };
                let marks = order.iter().map(|&l| highest[l - 1]).collect();
                let edges = bourbaki.iter().map(|&(x, y)| (pos(x), pos(y))).collect();
                (marks, edges, vec![pos(affine_label)])
            }
        };
        let labels_plain: Vec<String> = match ade.family() {
            Family::E6 | Family::E7 | Family::E8 => {
                e_layout(n).iter().map(|l| format!("a{l}")).collect()
            }
            _ => (1..=n).map(|l| format!("a{l}")).collect(),
        };
        let mut adjacency = vec![vec![0u32; n + 1]; n + 1];
        for (x, y) in edges {
            adjacency[x + 1][y + 1] += 1;
            adjacency[y + 1][x + 1] += 1;
        }
        for v in affine {
            adjacency[0][v + 1] += 1;
            adjacency[v + 1][0] += 1;
        }
        let mut labels = vec!["a0".to_string()];
        labels.extend(labels_plain);
        let mut all_marks = vec![1];
        all_marks.extend(marks);
        let graph = Graph::new(labels, adjacency)
            .and_then(|g| g.with_marks(all_marks))
            .and_then(|g| g.with_trivial(0))
            .expect("reference diagram is well formed");
        DynkinDiagram {
            ade,
            extended: true,
            graph,
        }
    }
}

/// Bourbaki labels of E_n in layout order: a1 a3 a5 .. an, then a2, then the
/// branch vertex a4.
fn e_layout(n: usize) -> Vec<usize> {
    let mut order = vec![1, 3];
    order.extend(5..=n);
    order.extend([2, 4]);
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::character_table;
    use crate::group::build_group;

    fn path(n: usize) -> Graph {
        let mut adj = vec![vec![0; n]; n];
        for i in 0..n.saturating_sub(1) {
            adj[i][i + 1] = 1;
            adj[i + 1][i] = 1;
        }
        Graph::new((0..n).map(|i| format!("p{i}")).collect(), adj).unwrap()
    }

    fn extended_from_group(ade: AdeType) -> Graph {
        let g = build_group(ade).unwrap();
        mckay_graph(&character_table(&g).unwrap()).unwrap()
    }

    #[test]
    fn rejects_malformed_graphs() {
        let labels = vec!["x".into(), "y".into()];
        assert!(Graph::new(labels.clone(), vec![vec![0, 1], vec![0, 0]]).is_err());
        assert!(Graph::new(labels, vec![vec![1, 0], vec![0, 0]]).is_err());
    }

    #[test]
    fn mckay_graph_a2_is_a_triangle() {
        let g = extended_from_group(AdeType::a(2).unwrap());
        assert_eq!(g.adjacency(), &[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
        let q = delete_trivial_vertex(&g).unwrap();
        assert!(graph_isomorphic(&q, &path(2)).is_some());
    }

    #[test]
    fn mckay_graph_a1_has_a_double_edge() {
        let g = extended_from_group(AdeType::a(1).unwrap());
        assert_eq!(g.adjacency(), &[vec![0, 2], vec![2, 0]]);
        assert!(affine_null_check(&g));
        let q = delete_trivial_vertex(&g).unwrap();
        assert_eq!(q.len(), 1);
        assert_eq!(q.edge_count(), 0);
    }

    #[test]
    fn mckay_graph_d5() {
        let g = extended_from_group(AdeType::d(5).unwrap());
        assert_eq!(g.len(), 6);
        let mut marks = g.marks().unwrap().to_vec();
        marks.sort_unstable();
        assert_eq!(marks, vec![1, 1, 1, 1, 2, 2]);
        assert!(affine_null_check(&g));
        let reference = DynkinDiagram::extended(AdeType::d(5).unwrap());
        assert!(graph_isomorphic(&g, &reference.graph).is_some());
        let q = delete_trivial_vertex(&g).unwrap();
        let d5 = DynkinDiagram::reference(AdeType::d(5).unwrap());
        assert!(graph_isomorphic(&q, &d5.graph).is_some());
    }

    #[test]
    fn delete_requires_trivial_mark() {
        assert!(matches!(delete_trivial_vertex(&path(3)), Err(Error::Usage(_))));
    }

    #[test]
    fn isomorphism_examples() {
        let p = path(4);
        assert_eq!(graph_isomorphic(&p, &p), Some(vec![0, 1, 2, 3]));
        // D3 coincides with A3: a branch vertex with two leaves is a 3-path
        let mut star = vec![vec![0; 3]; 3];
        for leaf in [0, 1] {
            star[leaf][2] = 1;
            star[2][leaf] = 1;
        }
        let star = Graph::new(vec!["l1".into(), "l2".into(), "b".into()], star).unwrap();
        assert_eq!(graph_isomorphic(&path(3), &star), Some(vec![0, 2, 1]));
        assert!(graph_isomorphic(&path(3), &path(4)).is_none());
        let a4 = DynkinDiagram::reference(AdeType::a(4).unwrap());
        let d4 = DynkinDiagram::reference(AdeType::d(4).unwrap());
        assert!(graph_isomorphic(&a4.graph, &d4.graph).is_none());
    }

    #[test]
    fn e8_pipeline() {
        let g = extended_from_group(AdeType::e8());
        assert!(affine_null_check(&g));
        assert!(g.is_connected());
        let q = delete_trivial_vertex(&g).unwrap();
        let e8 = DynkinDiagram::reference(AdeType::e8());
        assert!(graph_isomorphic(&q, &e8.graph).is_some());
        assert_eq!(g.to_dot("E8").matches(" -- ").count(), 8);
        assert_eq!(g.to_dot("E8").matches("label=").count(), 9);
    }

    #[test]
    fn reference_diagrams_are_sound() {
        for ade in AdeType::all_up_to(12) {
            let ext = DynkinDiagram::extended(ade);
            let plain = DynkinDiagram::reference(ade);
            assert_eq!(ext.graph.len(), ade.rank() as usize + 1);
            assert_eq!(plain.graph.len(), ade.rank() as usize);
            assert!(affine_null_check(&ext.graph), "{ade}");
            assert!(ext.graph.is_connected() && plain.graph.is_connected());
            // trees, except the cycle of the extended A family
            assert_eq!(plain.graph.edge_count() as usize, ade.rank() as usize - 1);
            let squares: u32 = ext.marks().iter().map(|m| m * m).sum();
            assert_eq!(squares as usize, ade.group_order(), "{ade}");
        }
    }

    #[test]
    fn dot_is_deterministic() {
        let g = extended_from_group(AdeType::a(1).unwrap());
        let dot = g.to_dot("A1");
        assert_eq!(
            dot,
            "graph \"A1\" {\n  v0 [label=\"V0(1)\"];\n  v1 [label=\"V1(1)\"];\n  v0 -- v1;\n  v0 -- v1;\n}\n"
        );
    }
}
