use super::{ar_sequence, syzygy, ArError};
use crate::field::Field;
use crate::jordan::{generic_jordan_type, is_eip, is_ekp, JordanType};
use crate::module::{fitting_decompose, is_isomorphic, Module};
use serde::Serialize;
use std::fmt::Write;

#[derive(Clone, Debug, Serialize)]
pub struct SliceVertex {
    /// `m` in `τ^m ((r) M)`.
    pub tau_power: i64,
    pub quasi_length: usize,
    pub dim: usize,
    pub jordan_type: JordanType,
    pub eip: bool,
    pub eip_class: usize,
    pub ekp: bool,
    pub label: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EdgeKind {
    Irreducible,
    Translation,
}

/// The grid `τ^m ((r) M)` for `|m| <= width`, `1 <= r <= height`.
#[derive(Clone, Debug, Serialize)]
#[serde(bound = "")]
pub struct ComponentSlice<F: Field> {
    pub width: i64,
    pub height: usize,
    pub vertices: Vec<SliceVertex>,
    #[serde(skip)]
    pub modules: Vec<Module<F>>,
    pub edges: Vec<(usize, usize, EdgeKind)>,
    /// The middle term of the sequence ending in `M` is indecomposable.
    pub input_quasi_simple: bool,
}

impl<F: Field> ComponentSlice<F> {
    pub fn index(&self, m: i64, r: usize) -> Option<usize> {
        if m.abs() > self.width || r == 0 || r > self.height {
            return None;
        }
        Some((r - 1) * (2 * self.width as usize + 1) + (m + self.width) as usize)
    }

    pub fn vertex(&self, m: i64, r: usize) -> Option<&SliceVertex> {
        self.index(m, r).map(|i| &self.vertices[i])
    }

    pub fn module(&self, m: i64, r: usize) -> Option<&Module<F>> {
        self.index(m, r).map(|i| &self.modules[i])
    }

    /// Vertices of the wing of `τ^m ((r) M)`: `τ^{m+i} ((s) M)` with
    /// `s + i <= r`, clipped to the window.
    pub fn wing(&self, m: i64, r: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for s in 1..=r {
            for i in 0..=(r - s) as i64 {
                if let Some(ix) = self.index(m + i, s) {
                    out.push(ix);
                }
            }
        }
        out
    }

    pub fn eip_vertices(&self) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&i| self.vertices[i].eip).collect()
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph component {\n  rankdir=BT;\n");
        for (i, v) in self.vertices.iter().enumerate() {
            let style = if v.eip { ", style=filled, fillcolor=lightblue" } else { "" };
            let _ = writeln!(
                s,
                "  v{i} [label=\"{}\\ndim {}\\n{}\\nEIP={} EKP={}\"{style}];",
                v.label, v.dim, v.jordan_type, v.eip, v.ekp
            );
        }
        for &(a, b, k) in &self.edges {
            let attr = match k {
                EdgeKind::Irreducible => "",
                EdgeKind::Translation => " [style=dashed]",
            };
            let _ = writeln!(s, "  v{a} -> v{b}{attr};");
        }
        s.push_str("}\n");
        s
    }
}

/// `E(Z_r) = Z_{r+1} ⊕ τ Z_{r-1}`: the summand other than `τ Z_{r-1}`.
fn next_quasi_length<F: Field>(middle: &Module<F>, remove: Option<&Module<F>>, r: usize) -> Result<Module<F>, ArError> {
    let Some(t) = remove else { return Ok(middle.clone()) };
    let parts = fitting_decompose(middle);
    let mut rest: Vec<Module<F>> = Vec::new();
    let mut removed = false;
    for s in &parts {
        for _ in 0..s.multiplicity {
            if !removed && s.module.dim() == t.dim() && is_isomorphic(&s.module, t).isomorphic {
                removed = true;
            } else {
                rest.push(s.module.clone());
            }
        }
    }
    if !removed || rest.len() != 1 {
        return Err(ArError::MiddleTermShape { quasi_length: r });
    }
    Ok(rest.pop().unwrap())
}

pub fn component_slice<F: Field>(m: &Module<F>, width: i64, height: usize) -> Result<ComponentSlice<F>, ArError> {
    assert!(height >= 1 && width >= 0);
    // Z_1 = M and Z_{r+1} from the sequence ending in Z_r
    let first = ar_sequence(m)?;
    let input_quasi_simple = fitting_decompose(&first.middle).iter().map(|s| s.multiplicity).sum::<usize>() == 1;
    let mut zs: Vec<Module<F>> = vec![m.clone()];
    let mut seq = first;
    while zs.len() < height {
        let r = zs.len();
        let remove = if r >= 2 { Some(syzygy(&zs[r - 2], 2)) } else { None };
        let z = next_quasi_length(&seq.middle, remove.as_ref(), r)?;
        zs.push(z);
        if zs.len() < height {
            seq = ar_sequence(zs.last().unwrap())?;
        }
    }
    let base = m.name().unwrap_or("M").to_string();
    let mut vertices = Vec::new();
    let mut modules = Vec::new();
    for (ri, z) in zs.iter().enumerate() {
        for mm in -width..=width {
            let v = syzygy(z, 2 * mm);
            let jt = generic_jordan_type(&v);
            let e = is_eip(&v);
            let label = match (mm, ri) {
                (0, 0) => base.clone(),
                (0, _) => format!("({}){}", ri + 1, base),
                (_, 0) => format!("τ^{mm} {base}"),
                _ => format!("τ^{mm} ({}){}", ri + 1, base),
            };
            vertices.push(SliceVertex {
                tau_power: mm,
                quasi_length: ri + 1,
                dim: v.dim(),
                jordan_type: jt,
                eip: e.eip,
                eip_class: e.class,
                ekp: is_ekp(&v).verdict,
                label,
            });
            modules.push(v);
        }
    }
    let mut slice = ComponentSlice { width, height, vertices, modules, edges: Vec::new(), input_quasi_simple };
    let mut edges = Vec::new();
    for r in 1..=height {
        for mm in -width..=width {
            let here = slice.index(mm, r).unwrap();
            if let Some(up) = slice.index(mm, r + 1) {
                edges.push((up, here, EdgeKind::Irreducible));
            }
            if let Some(prev) = slice.index(mm + 1, r - 1) {
                edges.push((prev, here, EdgeKind::Irreducible));
            }
            if let Some(t) = slice.index(mm + 1, r) {
                edges.push((here, t, EdgeKind::Translation));
            }
        }
    }
    slice.edges = edges;
    Ok(slice)
}
