//! Simplicial P1 meshes of 1D intervals and 2D triangulated domains.
//!
//! Gradients of the nodal basis are constant per element and are stored at
//! construction time. The local-0 gradient is stored as the exact negated sum
//! of the others, and field gradients are evaluated from nodal differences, so
//! constant fields produce exactly zero gradients.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::functionals::DiscreteField;

/// Simplicial mesh with boundary identification and precomputed measures.
///
/// 1D boundary facets are single points and carry measure 1 by convention, so
/// boundary integrals reduce to endpoint evaluations.
#[derive(Debug, Clone)]
pub struct Mesh {
    /// Spatial dimension, 1 or 2.
    pub dim: usize,
    /// Node coordinates; in 1D the second component is 0.
    pub nodes: Vec<[f64; 2]>,
    /// Element connectivity, flat with stride `dim + 1`.
    elem_nodes: Vec<usize>,
    /// Boundary facet connectivity, flat with stride `dim`.
    facet_nodes: Vec<usize>,
    /// Lebesgue measure of each element.
    pub element_measures: Vec<f64>,
    /// Surface measure of each boundary facet.
    pub facet_measures: Vec<f64>,
    /// Constant P1 basis gradients, flat with stride `dim + 1`.
    elem_grads: Vec<[f64; 2]>,
}

impl Mesh {
    pub fn n_nodes(&self) -> usize {
        self.nodes.len()
    }

    pub fn n_elements(&self) -> usize {
        self.element_measures.len()
    }

    pub fn n_facets(&self) -> usize {
        self.facet_measures.len()
    }

    /// Node indices of element `k`.
    pub fn element(&self, k: usize) -> &[usize] {
        let s = self.dim + 1;
        &self.elem_nodes[k * s..(k + 1) * s]
    }

    /// Node indices of boundary facet `k`.
    pub fn facet(&self, k: usize) -> &[usize] {
        let s = self.dim;
        &self.facet_nodes[k * s..(k + 1) * s]
    }

    /// Gradient of the local basis function `local` on element `k`.
    pub fn basis_gradient(&self, k: usize, local: usize) -> [f64; 2] {
        self.elem_grads[k * (self.dim + 1) + local]
    }

    /// Constant gradient of the P1 interpolant of `values` on element `k`.
    ///
    /// Evaluated from nodal differences against local node 0, so constant
    /// fields give an exact zero vector.
    pub fn field_gradient(&self, k: usize, values: &[f64]) -> [f64; 2] {
        let nodes = self.element(k);
        let v0 = values[nodes[0]];
        let mut g = [0.0, 0.0];
        for local in 1..=self.dim {
            let d = values[nodes[local]] - v0;
            let bg = self.basis_gradient(k, local);
            g[0] += d * bg[0];
            g[1] += d * bg[1];
        }
        g
    }

    /// Gradient of the P1 interpolant of `u` on one element (checked variant).
    ///
    /// In 1D the second component of the returned vector is 0.
    pub fn p1_gradient(&self, u: &DiscreteField, element_index: usize) -> Result<[f64; 2]> {
        if element_index >= self.n_elements() {
            return Err(Error::InvalidArgument(format!(
                "element index {element_index} out of range ({} elements)",
                self.n_elements()
            )));
        }
        if u.len() != self.n_nodes() {
            return Err(Error::InvalidArgument(format!(
                "field has {} entries, mesh has {} nodes",
                u.len(),
                self.n_nodes()
            )));
        }
        Ok(self.field_gradient(element_index, u.values()))
    }

    /// Uniform mesh of the interval (0, length) with `n_elements` elements.
    pub fn generate_interval(n_elements: usize, length: f64) -> Result<Mesh> {
        if n_elements < 2 {
            return Err(Error::InvalidArgument(format!(
                "interval mesh needs at least 2 elements, got {n_elements}"
            )));
        }
        if !(length > 0.0) || !length.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "interval length must be positive and finite, got {length}"
            )));
        }
        let n_nodes = n_elements + 1;
        let nodes: Vec<[f64; 2]> = (0..n_nodes)
            .map(|i| [length * (i as f64) / (n_elements as f64), 0.0])
            .collect();
        let mut elem_nodes = Vec::with_capacity(2 * n_elements);
        let mut element_measures = Vec::with_capacity(n_elements);
        let mut elem_grads = Vec::with_capacity(2 * n_elements);
        for k in 0..n_elements {
            elem_nodes.push(k);
            elem_nodes.push(k + 1);
            let h = nodes[k + 1][0] - nodes[k][0];
            element_measures.push(h);
            let g1 = 1.0 / h;
            elem_grads.push([-g1, 0.0]);
            elem_grads.push([g1, 0.0]);
        }
        // Point facets carry measure 1: boundary integrals are endpoint values.
        let facet_nodes = vec![0, n_elements];
        let facet_measures = vec![1.0, 1.0];
        let mesh = Mesh {
            dim: 1,
            nodes,
            elem_nodes,
            facet_nodes,
            element_measures,
            facet_measures,
            elem_grads,
        };
        mesh.validate()?;
        Ok(mesh)
    }

    /// Structured triangulation of the unit square with `n_per_side` cells per
    /// side; each grid cell is split into two triangles.
    pub fn generate_unit_square(n_per_side: usize) -> Result<Mesh> {
        if n_per_side < 2 {
            return Err(Error::InvalidArgument(format!(
                "unit square mesh needs at least 2 cells per side, got {n_per_side}"
            )));
        }
        let n = n_per_side;
        let np = n + 1;
        let idx = |i: usize, j: usize| j * np + i;
        let nodes: Vec<[f64; 2]> = (0..np)
            .flat_map(|j| (0..np).map(move |i| [i as f64 / n as f64, j as f64 / n as f64]))
            .collect();

        let mut elements: Vec<[usize; 3]> = Vec::with_capacity(2 * n * n);
        for j in 0..n {
            for i in 0..n {
                let v00 = idx(i, j);
                let v10 = idx(i + 1, j);
                let v01 = idx(i, j + 1);
                let v11 = idx(i + 1, j + 1);
                elements.push([v00, v10, v11]);
                elements.push([v00, v11, v01]);
            }
        }
        let mut facets: Vec<[usize; 2]> = Vec::with_capacity(4 * n);
        for i in 0..n {
            facets.push([idx(i, 0), idx(i + 1, 0)]);
            facets.push([idx(i, n), idx(i + 1, n)]);
            facets.push([idx(0, i), idx(0, i + 1)]);
            facets.push([idx(n, i), idx(n, i + 1)]);
        }
        Mesh::from_triangles(nodes, &elements, &facets)
    }

    /// Build a 2D mesh from explicit triangles and boundary edges, computing
    /// measures and basis gradients from the geometry.
    pub fn from_triangles(
        nodes: Vec<[f64; 2]>,
        elements: &[[usize; 3]],
        boundary_edges: &[[usize; 2]],
    ) -> Result<Mesh> {
        let mut elem_nodes = Vec::with_capacity(3 * elements.len());
        let mut element_measures = Vec::with_capacity(elements.len());
        let mut elem_grads = Vec::with_capacity(3 * elements.len());
        for (k, tri) in elements.iter().enumerate() {
            let [a, b, c] = *tri;
            for &v in tri {
                if v >= nodes.len() {
                    return Err(Error::InvalidArgument(format!(
                        "element {k} references node {v} but mesh has {} nodes",
                        nodes.len()
                    )));
                }
            }
            let d1 = [nodes[b][0] - nodes[a][0], nodes[b][1] - nodes[a][1]];
            let d2 = [nodes[c][0] - nodes[a][0], nodes[c][1] - nodes[a][1]];
            let det = d1[0] * d2[1] - d2[0] * d1[1];
            if det == 0.0 || !det.is_finite() {
                return Err(Error::InvalidArgument(format!("element {k} is degenerate")));
            }
            element_measures.push(det.abs() / 2.0);
            let g1 = [d2[1] / det, -d2[0] / det];
            let g2 = [-d1[1] / det, d1[0] / det];
            let g0 = [-(g1[0] + g2[0]), -(g1[1] + g2[1])];
            elem_grads.push(g0);
            elem_grads.push(g1);
            elem_grads.push(g2);
            elem_nodes.extend_from_slice(tri);
        }
        let mut facet_nodes = Vec::with_capacity(2 * boundary_edges.len());
        let mut facet_measures = Vec::with_capacity(boundary_edges.len());
        for (k, edge) in boundary_edges.iter().enumerate() {
            let [a, b] = *edge;
            if a >= nodes.len() || b >= nodes.len() {
                return Err(Error::InvalidArgument(format!(
                    "facet {k} references a node outside the mesh"
                )));
            }
            let dx = nodes[b][0] - nodes[a][0];
            let dy = nodes[b][1] - nodes[a][1];
            facet_measures.push(dx.hypot(dy));
            facet_nodes.push(a);
            facet_nodes.push(b);
        }
        let mesh = Mesh {
            dim: 2,
            nodes,
            elem_nodes,
            facet_nodes,
            element_measures,
            facet_measures,
            elem_grads,
        };
        mesh.validate()?;
        Ok(mesh)
    }

    /// Parse the plain-text mesh format.
    ///
    /// First line `dim N_v N_e N_f`, then `N_v` coordinate lines, `N_e`
    /// element lines and `N_f` facet lines of 0-based node indices, all
    /// whitespace-separated.
    pub fn from_text(text: &str) -> Result<Mesh> {
        let mut tokens = text.split_whitespace();
        let mut next_usize = |what: &str| -> Result<usize> {
            tokens
                .next()
                .ok_or_else(|| Error::MeshIo(format!("missing {what}")))?
                .parse::<usize>()
                .map_err(|e| Error::MeshIo(format!("bad {what}: {e}")))
        };
        let dim = next_usize("dimension")?;
        if dim != 1 && dim != 2 {
            return Err(Error::MeshIo(format!("dimension must be 1 or 2, got {dim}")));
        }
        let n_v = next_usize("node count")?;
        let n_e = next_usize("element count")?;
        let n_f = next_usize("facet count")?;
        let remaining: Vec<&str> = tokens.collect();
        let expected = n_v * dim + n_e * (dim + 1) + n_f * dim;
        if remaining.len() != expected {
            return Err(Error::MeshIo(format!(
                "expected {expected} trailing numbers, found {}",
                remaining.len()
            )));
        }
        let mut pos = 0;
        let mut parse_f64 = |s: &str| -> Result<f64> {
            s.parse::<f64>().map_err(|e| Error::MeshIo(format!("bad coordinate: {e}")))
        };
        let mut nodes = Vec::with_capacity(n_v);
        for _ in 0..n_v {
            let x = parse_f64(remaining[pos])?;
            let y = if dim == 2 { parse_f64(remaining[pos + 1])? } else { 0.0 };
            nodes.push([x, y]);
            pos += dim;
        }
        let parse_idx = |s: &str| -> Result<usize> {
            s.parse::<usize>().map_err(|e| Error::MeshIo(format!("bad node index: {e}")))
        };
        if dim == 1 {
            let mut elements = Vec::with_capacity(n_e);
            for _ in 0..n_e {
                elements.push([parse_idx(remaining[pos])?, parse_idx(remaining[pos + 1])?]);
                pos += 2;
            }
            let mut facets = Vec::with_capacity(n_f);
            for _ in 0..n_f {
                facets.push(parse_idx(remaining[pos])?);
                pos += 1;
            }
            Mesh::from_segments(nodes, &elements, &facets)
        } else {
            let mut elements = Vec::with_capacity(n_e);
            for _ in 0..n_e {
                elements.push([
                    parse_idx(remaining[pos])?,
                    parse_idx(remaining[pos + 1])?,
                    parse_idx(remaining[pos + 2])?,
                ]);
                pos += 3;
            }
            let mut facets = Vec::with_capacity(n_f);
            for _ in 0..n_f {
                facets.push([parse_idx(remaining[pos])?, parse_idx(remaining[pos + 1])?]);
                pos += 2;
            }
            Mesh::from_triangles(nodes, &elements, &facets)
        }
    }

    /// Build a 1D mesh from explicit segments and boundary points.
    pub fn from_segments(
        nodes: Vec<[f64; 2]>,
        elements: &[[usize; 2]],
        boundary_points: &[usize],
    ) -> Result<Mesh> {
        let mut elem_nodes = Vec::with_capacity(2 * elements.len());
        let mut element_measures = Vec::with_capacity(elements.len());
        let mut elem_grads = Vec::with_capacity(2 * elements.len());
        for (k, seg) in elements.iter().enumerate() {
            let [a, b] = *seg;
            if a >= nodes.len() || b >= nodes.len() {
                return Err(Error::InvalidArgument(format!(
                    "element {k} references a node outside the mesh"
                )));
            }
            let h = nodes[b][0] - nodes[a][0];
            if h == 0.0 || !h.is_finite() {
                return Err(Error::InvalidArgument(format!("element {k} is degenerate")));
            }
            element_measures.push(h.abs());
            let g1 = 1.0 / h;
            elem_grads.push([-g1, 0.0]);
            elem_grads.push([g1, 0.0]);
            elem_nodes.push(a);
            elem_nodes.push(b);
        }
        let facet_nodes: Vec<usize> = boundary_points.to_vec();
        if facet_nodes.iter().any(|&v| v >= nodes.len()) {
            return Err(Error::InvalidArgument("facet references a node outside the mesh".into()));
        }
        let facet_measures = vec![1.0; facet_nodes.len()];
        let mesh = Mesh {
            dim: 1,
            nodes,
            elem_nodes,
            facet_nodes,
            element_measures,
            facet_measures,
            elem_grads,
        };
        mesh.validate()?;
        Ok(mesh)
    }

    /// Serialize in the plain-text mesh format accepted by [`Mesh::from_text`].
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} {} {} {}\n",
            self.dim,
            self.n_nodes(),
            self.n_elements(),
            self.n_facets()
        );
        for node in &self.nodes {
            if self.dim == 1 {
                out.push_str(&format!("{:.17e}\n", node[0]));
            } else {
                out.push_str(&format!("{:.17e} {:.17e}\n", node[0], node[1]));
            }
        }
        for k in 0..self.n_elements() {
            let e = self.element(k);
            let strs: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            out.push_str(&strs.join(" "));
            out.push('\n');
        }
        for k in 0..self.n_facets() {
            let f = self.facet(k);
            let strs: Vec<String> = f.iter().map(|v| v.to_string()).collect();
            out.push_str(&strs.join(" "));
            out.push('\n');
        }
        out
    }

    /// Check the structural mesh invariants.
    pub fn validate(&self) -> Result<()> {
        let n = self.n_nodes();
        if self.elem_nodes.iter().any(|&v| v >= n) || self.facet_nodes.iter().any(|&v| v >= n) {
            return Err(Error::InvalidArgument("connectivity references a missing node".into()));
        }
        if self.element_measures.iter().any(|&m| !(m > 0.0)) {
            return Err(Error::InvalidArgument("non-positive element measure".into()));
        }
        if self.facet_measures.iter().any(|&m| !(m > 0.0)) {
            return Err(Error::InvalidArgument("non-positive facet measure".into()));
        }
        // Partition of unity of the basis gradients, scaled by their magnitude.
        for k in 0..self.n_elements() {
            let mut sum = [0.0, 0.0];
            let mut mag: f64 = 0.0;
            for local in 0..=self.dim {
                let g = self.basis_gradient(k, local);
                sum[0] += g[0];
                sum[1] += g[1];
                mag = mag.max(g[0].abs()).max(g[1].abs());
            }
            let tol = 1e-12 * (1.0 + mag);
            if sum[0].abs() > tol || sum[1].abs() > tol {
                return Err(Error::InvalidArgument(format!(
                    "basis gradients of element {k} do not sum to zero"
                )));
            }
        }
        // Every boundary facet must be a face of exactly one element.
        let mut face_counts: HashMap<Vec<usize>, usize> = HashMap::new();
        for k in 0..self.n_elements() {
            let e = self.element(k);
            if self.dim == 1 {
                for &v in e {
                    *face_counts.entry(vec![v]).or_insert(0) += 1;
                }
            } else {
                for pair in [[e[0], e[1]], [e[1], e[2]], [e[0], e[2]]] {
                    let mut key = pair.to_vec();
                    key.sort_unstable();
                    *face_counts.entry(key).or_insert(0) += 1;
                }
            }
        }
        for k in 0..self.n_facets() {
            let mut key = self.facet(k).to_vec();
            key.sort_unstable();
            match face_counts.get(&key) {
                Some(1) => {}
                Some(c) => {
                    return Err(Error::InvalidArgument(format!(
                        "boundary facet {k} is a face of {c} elements"
                    )))
                }
                None => {
                    return Err(Error::InvalidArgument(format!(
                        "boundary facet {k} is not a face of any element"
                    )))
                }
            }
        }
        Ok(())
    }

    /// Total measure of the discrete domain.
    pub fn domain_measure(&self) -> f64 {
        self.element_measures.iter().sum()
    }

    /// Total measure of the discrete boundary.
    pub fn boundary_measure(&self) -> f64 {
        self.facet_measures.iter().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn interval_two_elements() {
        let mesh = Mesh::generate_interval(2, 1.0).unwrap();
        assert_eq!(mesh.n_nodes(), 3);
        assert_eq!(mesh.nodes[1][0], 0.5);
        assert_eq!(mesh.element_measures, vec![0.5, 0.5]);
        assert_eq!(mesh.n_facets(), 2);
        assert_eq!(mesh.facet_measures, vec![1.0, 1.0]);
    }

    #[test]
    fn interval_four_elements_length_two() {
        let mesh = Mesh::generate_interval(4, 2.0).unwrap();
        assert_eq!(mesh.n_nodes(), 5);
        for &m in &mesh.element_measures {
            assert_relative_eq!(m, 0.5, max_relative = 1e-15);
        }
    }

    #[test]
    fn interval_rejects_single_element() {
        assert!(matches!(
            Mesh::generate_interval(1, 1.0),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn unit_square_counts() {
        let mesh = Mesh::generate_unit_square(2).unwrap();
        assert_eq!(mesh.n_nodes(), 9);
        assert_eq!(mesh.n_elements(), 8);
        assert_eq!(mesh.n_facets(), 8);
        for &m in &mesh.element_measures {
            assert_relative_eq!(m, 0.125, max_relative = 1e-14);
        }
        for &m in &mesh.facet_measures {
            assert_relative_eq!(m, 0.5, max_relative = 1e-14);
        }

        let mesh3 = Mesh::generate_unit_square(3).unwrap();
        assert_eq!(mesh3.n_nodes(), 16);
        assert_eq!(mesh3.n_elements(), 18);
        assert_eq!(mesh3.n_facets(), 12);

        let mesh4 = Mesh::generate_unit_square(4).unwrap();
        assert_eq!(mesh4.n_nodes(), 25);
        assert_eq!(mesh4.n_elements(), 32);
        assert!((mesh4.domain_measure() - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn unit_square_rejects_one_cell() {
        assert!(Mesh::generate_unit_square(1).is_err());
    }

    #[test]
    fn p1_gradient_linear_1d() {
        let mesh = Mesh::generate_interval(2, 1.0).unwrap();
        let u = DiscreteField::new(vec![0.0, 0.5, 1.0]);
        for k in 0..2 {
            let g = mesh.p1_gradient(&u, k).unwrap();
            assert_relative_eq!(g[0], 1.0, max_relative = 1e-13);
            assert_eq!(g[1], 0.0);
        }
    }

    #[test]
    fn p1_gradient_constant_is_exactly_zero() {
        let mesh = Mesh::generate_unit_square(3).unwrap();
        let u = DiscreteField::constant(mesh.n_nodes(), 3.7);
        for k in 0..mesh.n_elements() {
            let g = mesh.p1_gradient(&u, k).unwrap();
            assert_eq!(g, [0.0, 0.0]);
        }
    }

    #[test]
    fn p1_gradient_x_coordinate_2d() {
        let mesh = Mesh::generate_unit_square(2).unwrap();
        let u = DiscreteField::new(mesh.nodes.iter().map(|n| n[0]).collect());
        for k in 0..mesh.n_elements() {
            let g = mesh.p1_gradient(&u, k).unwrap();
            assert_relative_eq!(g[0], 1.0, max_relative = 1e-12);
            assert!(g[1].abs() <= 1e-12);
        }
    }

    #[test]
    fn p1_gradient_reproduces_affine_fields() {
        let mesh = Mesh::generate_unit_square(4).unwrap();
        let (cx, cy, d) = (1.25, -0.75, 0.3);
        let u = DiscreteField::new(
            mesh.nodes.iter().map(|n| cx * n[0] + cy * n[1] + d).collect(),
        );
        for k in 0..mesh.n_elements() {
            let g = mesh.p1_gradient(&u, k).unwrap();
            assert!((g[0] - cx).abs() <= 1e-12);
            assert!((g[1] - cy).abs() <= 1e-12);
        }
    }

    #[test]
    fn p1_gradient_index_out_of_range() {
        let mesh = Mesh::generate_interval(2, 1.0).unwrap();
        let u = DiscreteField::constant(3, 0.0);
        assert!(mesh.p1_gradient(&u, 2).is_err());
    }

    #[test]
    fn refinement_preserves_total_measures() {
        let coarse = Mesh::generate_interval(10, 1.0).unwrap();
        let fine = Mesh::generate_interval(160, 1.0).unwrap();
        assert!((coarse.domain_measure() - fine.domain_measure()).abs() <= 1e-12);
        assert!((coarse.boundary_measure() - fine.boundary_measure()).abs() <= 1e-12);

        let sq2 = Mesh::generate_unit_square(2).unwrap();
        let sq8 = Mesh::generate_unit_square(8).unwrap();
        assert!((sq2.domain_measure() - sq8.domain_measure()).abs() <= 1e-12);
        assert!((sq2.boundary_measure() - 4.0).abs() <= 1e-12);
        assert!((sq8.boundary_measure() - 4.0).abs() <= 1e-12);
    }

    #[test]
    fn boundary_nodes_lie_on_geometric_boundary() {
        let mesh = Mesh::generate_unit_square(5).unwrap();
        for k in 0..mesh.n_facets() {
            for &v in mesh.facet(k) {
                let [x, y] = mesh.nodes[v];
                let on_edge = x.abs() <= 1e-12
                    || (x - 1.0).abs() <= 1e-12
                    || y.abs() <= 1e-12
                    || (y - 1.0).abs() <= 1e-12;
                assert!(on_edge, "node ({x}, {y}) not on the square boundary");
            }
        }
        let line = Mesh::generate_interval(7, 2.0).unwrap();
        for k in 0..line.n_facets() {
            let x = line.nodes[line.facet(k)[0]][0];
            assert!(x.abs() <= 1e-12 || (x - 2.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn text_round_trip() {
        let mesh = Mesh::generate_unit_square(3).unwrap();
        let text = mesh.to_text();
        let back = Mesh::from_text(&text).unwrap();
        assert_eq!(back.n_nodes(), mesh.n_nodes());
        assert_eq!(back.n_elements(), mesh.n_elements());
        assert_eq!(back.n_facets(), mesh.n_facets());
        for k in 0..mesh.n_elements() {
            assert_eq!(back.element(k), mesh.element(k));
            assert_relative_eq!(
                back.element_measures[k],
                mesh.element_measures[k],
                max_relative = 1e-15
            );
        }

        let line = Mesh::generate_interval(4, 1.5).unwrap();
        let back = Mesh::from_text(&line.to_text()).unwrap();
        assert_eq!(back.dim, 1);
        assert_eq!(back.facet_measures, vec![1.0, 1.0]);
    }

    #[test]
    fn from_text_rejects_malformed_input() {
        assert!(Mesh::from_text("").is_err());
        assert!(Mesh::from_text("3 1 0 0\n0.0").is_err());
        // facet that is not a face of any element
        let bad = "1 3 2 2\n0.0\n0.5\n1.0\n0 1\n1 2\n0 0\n";
        assert!(Mesh::from_text(bad).is_err());
    }

    #[test]
    fn interior_edge_rejected_as_boundary_facet() {
        let nodes = vec![[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]];
        let tris = [[0usize, 1, 2], [0, 2, 3]];
        // (0, 2) is shared by both triangles
        let facets = [[0usize, 2]];
        assert!(Mesh::from_triangles(nodes, &tris, &facets).is_err());
    }
}
