//! Networks with summed colors.

use tvk_fusion_data::{FusionData, Label, Tensor};
use tvk_scalars::Cyclotomic;

use crate::{evaluate, structural, Basis, End, GraphError, Network, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Color {
    Fixed(Label),
    /// A summed variable.
    Var(usize),
    /// The dual of a summed variable.
    DualVar(usize),
}

/// A network whose colors may be variables, with a weight that is a
/// monomial in the dimensions of the variables.
#[derive(Clone, Debug, Default)]
pub struct Template {
    net: Network,
    colors: Vec<Color>,
    circles: Vec<Color>,
    vars: usize,
    weight: Vec<(usize, i32)>,
}

impl Template {
    pub fn new() -> Self {
        Self::default()
    }

    /// A fresh summed variable.
    pub fn var(&mut self) -> usize {
        self.vars += 1;
        self.vars - 1
    }

    pub fn edge(&mut self, c: Color) -> usize {
        if let Color::Var(v) | Color::DualVar(v) = c {
            self.vars = self.vars.max(v + 1);
        }
        self.colors.push(c);
        self.net.edge(0)
    }

    pub fn vertex(&mut self, ends: [End; 3], basis: Basis) -> VertexId {
        self.net.vertex(ends, basis)
    }

    pub fn pair(&mut self, u: VertexId, v: VertexId) {
        self.net.pair(u, v);
    }

    pub fn circle(&mut self, c: Color) {
        if let Color::Var(v) | Color::DualVar(v) = c {
            self.vars = self.vars.max(v + 1);
        }
        self.circles.push(c);
    }

    /// Multiply the weight by dim(var)^power.
    pub fn weight_dim(&mut self, var: usize, power: i32) {
        self.vars = self.vars.max(var + 1);
        self.weight.push((var, power));
    }

    fn instantiate(&self, f: &FusionData, assign: &[Label]) -> Network {
        let pick = |c: Color| match c {
            Color::Fixed(l) => l,
            Color::Var(v) => assign[v],
            Color::DualVar(v) => f.dual(assign[v]),
        };
        let mut g = self.net.clone();
        for (e, &c) in self.colors.iter().enumerate() {
            g.set_color(e, pick(c));
        }
        *g.circles_mut() = self.circles.iter().map(|&c| pick(c)).collect();
        g
    }
}

/// Σ over assignments of the variables of weight × evaluate; assignments
/// making some vertex inadmissible are skipped.
pub fn evaluate_sum(f: &FusionData, t: &Template) -> Result<Tensor, GraphError> {
    t.net.validate()?;
    let mut acc: Option<Tensor> = None;
    let mut assign = vec![0; t.vars];
    loop {
        let g = t.instantiate(f, &assign);
        let admissible = (0..g.vertices().len()).all(|v| f.n(g.triple(f, v)) > 0);
        if admissible {
            let mut w = Cyclotomic::one();
            for &(v, p) in &t.weight {
                w *= f.dim(assign[v]).pow(p.into());
            }
            let val = evaluate(f, &g)?.scale(&w);
            match acc.as_mut() {
                None => acc = Some(val),
                Some(a) if a.dims() != val.dims() => {
                    return Err(structural("free slot dimensions vary with the summed colors"))
                }
                Some(a) => a.add_assign(&val),
            }
        }
        // next assignment
        let mut k = 0;
        while k < assign.len() {
            assign[k] += 1;
            if assign[k] < f.rank() {
                break;
            }
            assign[k] = 0;
            k += 1;
        }
        if k == assign.len() {
            break;
        }
    }
    match acc {
        Some(a) => Ok(a),
        None => {
            // no admissible assignment: zero tensor shaped by the first one
            let g = t.instantiate(f, &vec![0; t.vars]);
            evaluate(f, &g).map(|x| Tensor::zeros(x.dims().to_vec()))
        }
    }
}
