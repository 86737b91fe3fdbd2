//! The symmetric group algebra `H_t = k S_t` with its Murphy basis.
//!
//! Permutations compose as functions. For a standard tableau `T` let `d(T)`
//! be the permutation with `d(T) · t^λ = T` (its row reading word), and
//! `x_λ` the sum of the row stabiliser of `t^λ`. Then
//! `m_{S,T} = d(S) x_λ d(T)^{-1}`, so `ι(m_{S,T}) = m_{T,S}` and the
//! elements `m_{T,t^λ}` span the left cell module `S^λ` modulo `H^{▷λ}`.
//! This is the usual right-handed convention transported through `ι`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use super::perm;
use crate::error::{bail, Result};
use crate::linalg::{Arith, Matrix, PrimeField};
use crate::partitions::{standard_tableaux, Partition, StandardTableau};

/// Largest `t` for which [`murphy_basis`] builds the basis by default.
pub const DEFAULT_MURPHY_BOUND: usize = 7;

/// Largest `t` for which coordinates in the Murphy basis are available;
/// they need the inverse of a `t! × t!` integer matrix.
pub const COORDINATE_BOUND: usize = 6;

/// Integer combination of permutations.
pub type GroupElement = BTreeMap<Vec<usize>, i64>;

/// Integer matrix of a permutation on a Specht module.
pub type ActionMatrix = Arc<Vec<Vec<i64>>>;

/// Permutations fixing every row of `t^λ` setwise.
pub fn row_stabilizer(shape: &Partition) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut start = 0;
    for &len in shape.parts() {
        let block = perm::all(len);
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                block.iter().map(move |b| {
                    let mut w = prefix.clone();
                    w.extend(b.iter().map(|&x| x + start));
                    w
                })
            })
            .collect();
        start += len;
    }
    out
}

/// `m_{S,T} = d(S) x_λ d(T)^{-1}`.
pub fn murphy_element(s: &StandardTableau, t: &StandardTableau) -> GroupElement {
    let ds = s.reading_word();
    let dt_inv = perm::inverse(&t.reading_word());
    row_stabilizer(&s.shape()).iter().map(|u| (perm::compose(&ds, &perm::compose(u, &dt_inv)), 1)).collect()
}

/// `ι(w) = w^{-1}`, extended linearly.
pub fn involution_iota(x: &GroupElement) -> GroupElement {
    x.iter().map(|(w, &c)| (perm::inverse(w), c)).collect()
}

/// `α(w) = (-1)^{ℓ(w)} w`, extended linearly.
pub fn sign_twist_alpha(x: &GroupElement) -> GroupElement {
    x.iter().map(|(w, &c)| (w.clone(), perm::sign(w) * c)).collect()
}

pub fn multiply_group(a: &GroupElement, b: &GroupElement) -> GroupElement {
    let mut out = GroupElement::new();
    for (u, &x) in a {
        for (v, &y) in b {
            *out.entry(perm::compose(u, v)).or_insert(0) += x * y;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Index of a Murphy basis element: shape, then positions of `S` and `T`
/// in [`standard_tableaux`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MurphyLabel {
    pub shape: Partition,
    pub s: usize,
    pub t: usize,
}

/// The Murphy basis of `H_t`, shapes in increasing dominance-compatible
/// order.
#[derive(Clone, Debug)]
pub struct MurphyBasis {
    t: usize,
    labels: Vec<MurphyLabel>,
    elements: Vec<GroupElement>,
}

impl MurphyBasis {
    pub fn size(&self) -> usize {
        self.t
    }

    pub fn labels(&self) -> &[MurphyLabel] {
        &self.labels
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The integer inverse of the matrix whose columns are the basis
    /// elements in the permutation basis (indexed by [`perm::rank`]).
    /// Computed modulo a large prime, lifted, and checked exactly.
    fn inverse(&self) -> Result<Vec<Vec<i64>>> {
        let size = self.elements.len();
        let big = PrimeField::new((1 << 31) - 1)?;
        let mut m = Matrix::zeros(big, size, size);
        for (j, x) in self.elements.iter().enumerate() {
            for (w, &c) in x {
                m.set(perm::rank(w), j, big.from_i64(c));
            }
        }
        let inv = m.inverse()?;
        let q = big.modulus() as u64;
        let lifted: Vec<Vec<i64>> = (0..size)
            .map(|i| inv.row(i).iter().map(|&v| crate::linalg::field::centered(v as u64, q)).collect())
            .collect();
        for (a, row) in lifted.iter().enumerate() {
            for (b, x) in self.elements.iter().enumerate() {
                let dot: i64 = x.iter().map(|(w, &c)| c * row[perm::rank(w)]).sum();
                if dot != i64::from(a == b) {
                    bail!(Internal, "lifted inverse of the Murphy matrix for t = {} is wrong", self.t);
                }
            }
        }
        Ok(lifted)
    }
}

/// All `m_{S,T}` for `λ ⊢ t`.
pub fn murphy_basis(t: usize, bound: usize) -> Result<MurphyBasis> {
    if t > bound {
        bail!(Resource, "Murphy basis for t = {t} exceeds the configured bound {bound}");
    }
    let mut labels = Vec::new();
    let mut elements = Vec::new();
    for shape in Partition::all_of_size(t) {
        let tabs = standard_tableaux(&shape);
        for (i, s) in tabs.iter().enumerate() {
            for (j, tt) in tabs.iter().enumerate() {
                labels.push(MurphyLabel { shape: shape.clone(), s: i, t: j });
                elements.push(murphy_element(s, tt));
            }
        }
    }
    Ok(MurphyBasis { t, labels, elements })
}

struct MurphyCoordinates {
    basis: MurphyBasis,
    inverse: Vec<Vec<i64>>,
}

fn coordinates(t: usize) -> Result<Arc<MurphyCoordinates>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<MurphyCoordinates>>>> = OnceLock::new();
    if t > COORDINATE_BOUND {
        bail!(Resource, "Murphy coordinates for t = {t} exceed the bound {COORDINATE_BOUND}");
    }
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().expect("cache lock").get(&t) {
        return Ok(hit.clone());
    }
    let basis = murphy_basis(t, COORDINATE_BOUND)?;
    let inverse = basis.inverse()?;
    let data = Arc::new(MurphyCoordinates { basis, inverse });
    cache.lock().expect("cache lock").insert(t, data.clone());
    Ok(data)
}

/// Coordinates of `x` in the Murphy basis of `H_t`, aligned with
/// [`MurphyBasis::labels`].
pub fn murphy_coordinates(t: usize, x: &GroupElement) -> Result<(Vec<MurphyLabel>, Vec<i64>)> {
    let data = coordinates(t)?;
    let coords = data.inverse.iter().map(|row| x.iter().map(|(w, &c)| c * row[perm::rank(w)]).sum()).collect();
    Ok((data.basis.labels.clone(), coords))
}

/// The cell module `S^λ` with basis `m_{T,t^λ}`, `T` standard of shape `λ`.
#[derive(Debug)]
pub struct SpechtModule {
    shape: Partition,
    tableaux: Vec<StandardTableau>,
    words: Vec<Vec<usize>>,
    stabilizer: Vec<Vec<usize>>,
    /// Rows of the inverse Murphy matrix for the labels `(λ, T, t^λ)`.
    rows: Vec<Vec<i64>>,
    cache: Mutex<HashMap<Vec<usize>, ActionMatrix>>,
}

impl SpechtModule {
    pub fn new(shape: &Partition) -> Result<Self> {
        let t = shape.size();
        let data = coordinates(t)?;
        let tableaux = standard_tableaux(shape);
        let rows = (0..tableaux.len())
            .map(|i| {
                let k = data
                    .basis
                    .labels
                    .iter()
                    .position(|l| l.shape == *shape && l.s == i && l.t == 0)
                    .expect("label present");
                data.inverse[k].clone()
            })
            .collect();
        Ok(SpechtModule {
            shape: shape.clone(),
            words: tableaux.iter().map(StandardTableau::reading_word).collect(),
            tableaux,
            stabilizer: row_stabilizer(shape),
            rows,
            cache: Mutex::new(HashMap::new()),
        })
    }

    /// Shared, cached instance per shape.
    pub fn shared(shape: &Partition) -> Result<Arc<SpechtModule>> {
        static CACHE: OnceLock<Mutex<HashMap<Partition, Arc<SpechtModule>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(hit) = cache.lock().expect("cache lock").get(shape) {
            return Ok(hit.clone());
        }
        let module = Arc::new(SpechtModule::new(shape)?);
        cache.lock().expect("cache lock").insert(shape.clone(), module.clone());
        Ok(module)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn tableaux(&self) -> &[StandardTableau] {
        &self.tableaux
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    fn coefficients(&self, terms: impl Iterator<Item = Vec<usize>>) -> Vec<i64> {
        let ranks: Vec<usize> = terms.map(|w| perm::rank(&w)).collect();
        self.rows.iter().map(|row| ranks.iter().map(|&r| row[r]).sum()).collect()
    }

    /// Matrix of `w`: entry `[i][j]` is the coefficient of `m_{T_i}` in
    /// `w · m_{T_j}`.
    pub fn action(&self, w: &[usize]) -> ActionMatrix {
        if let Some(hit) = self.cache.lock().expect("cache lock").get(w) {
            return hit.clone();
        }
        let f = self.dim();
        let mut matrix = vec![vec![0; f]; f];
        for (j, d) in self.words.iter().enumerate() {
            let wd = perm::compose(w, d);
            let column = self.coefficients(self.stabilizer.iter().map(|u| perm::compose(&wd, u)));
            for (i, c) in column.into_iter().enumerate() {
                matrix[i][j] = c;
            }
        }
        let matrix = Arc::new(matrix);
        self.cache.lock().expect("cache lock").insert(w.to_vec(), matrix.clone());
        matrix
    }

    /// The cellular form: `[i][j]` is the coefficient of `m_{t^λ,t^λ}` in
    /// `m_{t^λ,T_i} m_{T_j,t^λ}`.
    pub fn gram(&self) -> Vec<Vec<i64>> {
        let f = self.dim();
        let top = &self.rows[0];
        let mut g = vec![vec![0; f]; f];
        for i in 0..f {
            let di_inv = perm::inverse(&self.words[i]);
            for j in 0..f {
                let middle = perm::compose(&di_inv, &self.words[j]);
                let mut total = 0;
                for u in &self.stabilizer {
                    let left = perm::compose(u, &middle);
                    for v in &self.stabilizer {
                        total += top[perm::rank(&perm::compose(&left, v))];
                    }
                }
                g[i][j] = total;
            }
        }
        g
    }
}

/// Traces of every permutation, indexed by [`perm::rank`], on the simple
/// head `D^λ = S^λ / rad` over GF(p); `None` when the head is zero.
pub fn simple_head_traces(shape: &Partition, field: PrimeField) -> Result<Option<Vec<u32>>> {
    let specht = SpechtModule::shared(shape)?;
    let f = specht.dim();
    let to_matrix = |rows: &[Vec<i64>]| {
        Matrix::from_rows(field, f, rows.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect())
    };
    let gram = to_matrix(&specht.gram())?;
    let radical = gram.kernel();
    if radical.len() == f {
        return Ok(None);
    }
    let mut columns = radical.clone();
    let pivots =
        if radical.is_empty() { Vec::new() } else { Matrix::from_rows(field, f, radical.clone())?.rref().pivots };
    let complement: Vec<usize> = (0..f).filter(|j| !pivots.contains(j)).collect();
    for &j in &complement {
        let mut e = vec![0; f];
        e[j] = 1;
        columns.push(e);
    }
    let change = Matrix::from_columns(field, f, &columns);
    let back = change.inverse()?;
    let k = radical.len();
    let traces = perm::all(shape.size())
        .iter()
        .map(|w| {
            let rho = to_matrix(&specht.action(w))?;
            let conj = back.mul(&rho)?.mul(&change)?;
            Ok((k..f).fold(0, |acc, i| field.add(&acc, conj.get(i, i))))
        })
        .collect::<Result<Vec<u32>>>()?;
    Ok(Some(traces))
}

/// `λ^M` computed from modules: the `p`-restricted `μ` whose simple head
/// has the sign-twisted trace function of `D^λ`. Trace functions of
/// pairwise non-isomorphic absolutely simple modules are linearly
/// independent, so a match identifies the module.
pub fn mullineux_by_modules(shape: &Partition, p: u32) -> Result<Partition> {
    let field = PrimeField::new(p as u64)?;
    let Some(traces) = simple_head_traces(shape, field)? else {
        bail!(Domain, "{shape} is not {p}-restricted");
    };
    let t = shape.size();
    let twisted: Vec<u32> =
        perm::all(t).iter().zip(&traces).map(|(w, &c)| if perm::sign(w) < 0 { field.neg(&c) } else { c }).collect();
    let mut hits = Vec::new();
    for mu in Partition::all_of_size(t) {
        if let Some(other) = simple_head_traces(&mu, field)? {
            if other == twisted {
                hits.push(mu);
            }
        }
    }
    match hits.len() {
        1 => Ok(hits.remove(0)),
        _ => bail!(Internal, "sign twist of D^{shape} matched {} simple heads", hits.len()),
    }
}
