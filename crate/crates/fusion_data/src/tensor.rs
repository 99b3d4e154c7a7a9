//! Dense tensors over cyclotomic numbers and brute-force contraction.

use std::collections::HashMap;

use tvk_scalars::{Cyclotomic, Matrix};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor {
    dims: Vec<usize>,
    data: Vec<Cyclotomic>,
}

impl Tensor {
    pub fn zeros(dims: Vec<usize>) -> Self {
        let len = dims.iter().product();
        Tensor { dims, data: vec![Cyclotomic::zero(); len] }
    }

    pub fn from_data(dims: Vec<usize>, data: Vec<Cyclotomic>) -> Self {
        assert_eq!(dims.iter().product::<usize>(), data.len(), "tensor size mismatch");
        Tensor { dims, data }
    }

    pub fn scalar(x: Cyclotomic) -> Self {
        Tensor { dims: vec![], data: vec![x] }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn data(&self) -> &[Cyclotomic] {
        &self.data
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    fn offset(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.dims.len());
        let mut o = 0;
        for (i, d) in idx.iter().zip(&self.dims) {
            debug_assert!(i < d);
            o = o * d + i;
        }
        o
    }

    pub fn get(&self, idx: &[usize]) -> &Cyclotomic {
        &self.data[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], v: Cyclotomic) {
        let o = self.offset(idx);
        self.data[o] = v;
    }

    /// The single entry of a tensor whose dimensions are all 1.
    pub fn as_scalar(&self) -> Option<&Cyclotomic> {
        if self.data.len() == 1 {
            Some(&self.data[0])
        } else {
            None
        }
    }

    /// Tensor with slots reordered: new slot `s` is old slot `perm[s]`.
    pub fn permuted(&self, perm: &[usize]) -> Tensor {
        let dims: Vec<usize> = perm.iter().map(|&p| self.dims[p]).collect();
        let mut out = Tensor::zeros(dims.clone());
        for_each_index(&dims, |idx| {
            let mut old = vec![0; idx.len()];
            for (s, &p) in perm.iter().enumerate() {
                old[p] = idx[s];
            }
            out.set(idx, self.get(&old).clone());
        });
        out
    }

    pub fn scale(&self, k: &Cyclotomic) -> Tensor {
        Tensor { dims: self.dims.clone(), data: self.data.iter().map(|x| x * k).collect() }
    }

    pub fn add_assign(&mut self, other: &Tensor) {
        assert_eq!(self.dims, other.dims);
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += b;
        }
    }
}

/// Call `f` on every multi-index below `dims`, in row-major order.
pub fn for_each_index(dims: &[usize], mut f: impl FnMut(&[usize])) {
    if dims.contains(&0) {
        return;
    }
    let mut idx = vec![0; dims.len()];
    loop {
        f(&idx);
        let mut k = dims.len();
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < dims[k] {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// A product of tensors whose slots carry index variables, with pairwise
/// contractions through given weight matrices. Variables not consumed by a
/// contraction are the output slots.
#[derive(Default)]
pub struct Contraction<'a> {
    factors: Vec<(&'a Tensor, Vec<usize>)>,
    weights: Vec<(&'a Matrix, usize, usize)>,
    var_dims: HashMap<usize, usize>,
}

impl<'a> Contraction<'a> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn factor(&mut self, t: &'a Tensor, vars: Vec<usize>) -> &mut Self {
        assert_eq!(t.dims().len(), vars.len());
        for (v, &d) in vars.iter().zip(t.dims()) {
            let old = self.var_dims.insert(*v, d);
            assert!(old.is_none_or(|o| o == d), "variable {v} used with two sizes");
        }
        self.factors.push((t, vars));
        self
    }

    /// Weight `m[a, b]` tying variables a and b.
    pub fn weight(&mut self, m: &'a Matrix, a: usize, b: usize) -> &mut Self {
        self.weights.push((m, a, b));
        self
    }

    /// Evaluate with the given output variable order.
    pub fn eval(&self, outputs: &[usize]) -> Tensor {
        let mut inner: Vec<usize> = self.var_dims.keys().copied().filter(|v| !outputs.contains(v)).collect();
        inner.sort_unstable();
        let out_dims: Vec<usize> = outputs.iter().map(|v| self.var_dims[v]).collect();
        let in_dims: Vec<usize> = inner.iter().map(|v| self.var_dims[v]).collect();
        let mut slot = HashMap::new();
        for (i, v) in outputs.iter().chain(inner.iter()).enumerate() {
            slot.insert(*v, i);
        }
        let mut out = Tensor::zeros(out_dims.clone());
        let mut assign = vec![0usize; outputs.len() + inner.len()];
        for_each_index(&out_dims, |o| {
            assign[..o.len()].copy_from_slice(o);
            let mut acc = Cyclotomic::zero();
            for_each_index(&in_dims, |i| {
                assign[o.len()..].copy_from_slice(i);
                let mut term = Cyclotomic::one();
                for (m, a, b) in &self.weights {
                    term *= &m[(assign[slot[a]], assign[slot[b]])];
                    if term.is_zero() {
                        return;
                    }
                }
                for (t, vars) in &self.factors {
                    let idx: Vec<usize> = vars.iter().map(|v| assign[slot[v]]).collect();
                    term *= t.get(&idx);
                    if term.is_zero() {
                        return;
                    }
                }
                acc += term;
            });
            out.set(o, acc);
        });
        out
    }
}
