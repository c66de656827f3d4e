//! Partitions, dominance, Specht modules of symmetric groups and the
//! Hom/Ext dominance-vanishing tables for walled Brauer algebras.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;
use serde::Serialize;

use crate::diagrams::DiagramAlgebra;
use crate::error::{Error, Result};
use crate::input_algebra::{InputAlgebra, WreathAlgebra};
use crate::kernel::homological::ext1_dim;
use crate::kernel::linalg::{sparse_from_dense, Accumulator, BasisSolver, Matrix, SparseVec};
use crate::kernel::module::{hom_dim, RightModule};
use crate::scalars::Field;
use crate::split_pair::CornerSplitDatum;

/// Largest symmetric group whose Specht modules are built.
pub const MAX_SPECHT_SIZE: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// All partitions of `m`, in decreasing lexicographic order.
    pub fn all(m: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                prefix.push(p);
                go(rest - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(m, m, &mut Vec::new(), &mut out);
        out
    }

    fn partial_sums(&self, len: usize) -> Vec<usize> {
        (0..len)
            .scan(0, |acc, i| {
                *acc += self.0.get(i).copied().unwrap_or(0);
                Some(*acc)
            })
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        if inner.trim().is_empty() {
            return Ok(Partition(Vec::new()));
        }
        let parts = inner
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition '{s}'")))
            })
            .collect::<Result<_>>()?;
        Partition::new(parts)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Comparison {
    Less,
    Greater,
    Equal,
    Incomparable,
}

impl Comparison {
    /// `Greater` or `Equal`.
    pub fn at_least(self) -> bool {
        matches!(self, Comparison::Greater | Comparison::Equal)
    }

    fn reversed(self) -> Comparison {
        match self {
            Comparison::Less => Comparison::Greater,
            Comparison::Greater => Comparison::Less,
            other => other,
        }
    }
}

/// Dominance of `a` over `b` by partial sums.
pub fn dominance(a: &Partition, b: &Partition) -> Result<Comparison> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch(format!(
            "{a} and {b} have different sizes"
        )));
    }
    let len = a.0.len().max(b.0.len());
    let (sa, sb) = (a.partial_sums(len), b.partial_sums(len));
    let ge = sa.iter().zip(&sb).all(|(x, y)| x >= y);
    let le = sa.iter().zip(&sb).all(|(x, y)| x <= y);
    Ok(match (ge, le) {
        (true, true) => Comparison::Equal,
        (true, false) => Comparison::Greater,
        (false, true) => Comparison::Less,
        (false, false) => Comparison::Incomparable,
    })
}

/// A cell label `(l, λ⃗)`: one partition per component (two for walled
/// algebras, `r` for cyclotomic ones).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerLabel {
    pub layer: usize,
    pub parts: Vec<Partition>,
}

/// Compares `x` with `y` in the cell order: a deeper layer is smaller, and
/// within a layer `x ≤ y` when every component of `x` dominates that of `y`.
pub fn layer_order(x: &LayerLabel, y: &LayerLabel) -> Result<Comparison> {
    let total = |z: &LayerLabel| z.parts.iter().map(Partition::size).sum::<usize>() + 2 * z.layer;
    if x.parts.len() != y.parts.len() || total(x) != total(y) {
        return Err(Error::SizeMismatch(
            "labels belong to different algebras".into(),
        ));
    }
    if x.layer != y.layer {
        return Ok(if x.layer > y.layer {
            Comparison::Less
        } else {
            Comparison::Greater
        });
    }
    let comps = x
        .parts
        .iter()
        .zip(&y.parts)
        .map(|(a, b)| dominance(a, b))
        .collect::<Result<Vec<_>>>()?;
    let all = |c: Comparison| comps.iter().all(|&d| d == c || d == Comparison::Equal);
    Ok(if comps.iter().all(|&d| d == Comparison::Equal) {
        Comparison::Equal
    } else if all(Comparison::Greater) {
        Comparison::Greater.reversed()
    } else if all(Comparison::Less) {
        Comparison::Less.reversed()
    } else {
        Comparison::Incomparable
    })
}

/// Rows of a tableau; entries are `0..m`.
pub type Tableau = Vec<Vec<usize>>;

/// Standard tableaux of `shape`, filled in increasing order of entries.
pub fn standard_tableaux(shape: &Partition) -> Vec<Tableau> {
    fn go(shape: &[usize], next: usize, m: usize, t: &mut Tableau, out: &mut Vec<Tableau>) {
        if next == m {
            out.push(t.clone());
            return;
        }
        for row in 0..shape.len() {
            let len = t[row].len();
            let fits = len < shape[row] && (row == 0 || t[row - 1].len() > len);
            if fits {
                t[row].push(next);
                go(shape, next + 1, m, t, out);
                t[row].pop();
            }
        }
    }
    let mut out = Vec::new();
    go(
        shape.parts(),
        0,
        shape.size(),
        &mut vec![Vec::new(); shape.parts().len()],
        &mut out,
    );
    out
}

fn sign(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    let mut even = true;
    for s in 0..perm.len() {
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len > 0 && len % 2 == 0 {
            even = !even;
        }
    }
    even
}

/// Polytabloids inside the permutation module on row tabloids.
#[derive(Clone, Debug)]
struct PolytabloidModel {
    field: Field,
    /// Row of each entry.
    tabloid_index: HashMap<Vec<usize>, usize>,
    tabloids: Vec<Vec<usize>>,
    basis: Vec<SparseVec>,
    solver: BasisSolver,
}

impl PolytabloidModel {
    fn new(field: &Field, shape: &Partition, tableaux: &[Tableau]) -> Self {
        let m = shape.size();
        let rows: Vec<usize> = shape
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| std::iter::repeat_n(r, len))
            .collect();
        let tabloids: Vec<Vec<usize>> = rows
            .iter()
            .copied()
            .permutations(m)
            .unique()
            .sorted()
            .collect();
        let tabloid_index: HashMap<Vec<usize>, usize> = tabloids
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, t)| (t, i))
            .collect();
        let basis: Vec<SparseVec> = tableaux
            .iter()
            .map(|t| {
                let columns: Vec<Vec<usize>> = (0..t.first().map_or(0, Vec::len))
                    .map(|c| t.iter().filter_map(|row| row.get(c).copied()).collect())
                    .collect();
                let mut acc = Accumulator::new(field, tabloids.len());
                for choice in columns
                    .iter()
                    .map(|col| col.iter().copied().permutations(col.len()))
                    .multi_cartesian_product()
                {
                    // `choice[c]` rearranges column `c`; its sign is the product over columns.
                    let mut row_of = vec![0; m];
                    let mut even = true;
                    for (col, perm) in columns.iter().zip(&choice) {
                        let local: Vec<usize> = perm
                            .iter()
                            .map(|x| col.iter().position(|y| y == x).unwrap())
                            .collect();
                        even ^= !sign(&local);
                        for (r, &x) in perm.iter().enumerate() {
                            row_of[x] = r;
                        }
                    }
                    let c = if even {
                        field.one()
                    } else {
                        field.neg(&field.one())
                    };
                    acc.add(field, tabloid_index[&row_of], &c);
                }
                acc.drain(field)
            })
            .collect();
        let solver = BasisSolver::new(field, tabloids.len(), &basis);
        PolytabloidModel {
            field: field.clone(),
            tabloid_index,
            tabloids,
            basis,
            solver,
        }
    }

    /// Right action of `k ↦ perm[k]` on the polytabloid basis.
    fn act(&self, perm: &[usize]) -> Matrix {
        let f = &self.field;
        let rows = self
            .basis
            .iter()
            .map(|v| {
                let mut acc = Accumulator::new(f, self.tabloids.len());
                for (i, c) in v {
                    let row_of = &self.tabloids[*i];
                    let mut moved = vec![0; row_of.len()];
                    for (k, &r) in row_of.iter().enumerate() {
                        moved[perm[k]] = r;
                    }
                    acc.add(f, self.tabloid_index[&moved], c);
                }
                let image = acc.drain(f);
                sparse_from_dense(
                    &self
                        .solver
                        .solve(f, &image)
                        .expect("polytabloids span a submodule"),
                )
            })
            .collect();
        Matrix::from_rows(self.basis.len(), rows)
    }
}

#[derive(Clone, Debug)]
pub struct SpechtModule {
    shape: Partition,
    tableaux: Arc<Vec<Tableau>>,
    model: Arc<PolytabloidModel>,
    module: RightModule,
}

impl SpechtModule {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn tableaux(&self) -> &[Tableau] {
        &self.tableaux
    }

    pub fn module(&self) -> &RightModule {
        &self.module
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    /// Action matrix of a permutation of `0..|λ|`.
    pub fn permutation_action(&self, perm: &[usize]) -> Matrix {
        self.model.act(perm)
    }
}

/// `R S_m` as the wreath product of the trivial algebra.
pub fn symmetric_group_algebra(field: &Field, m: usize) -> WreathAlgebra {
    WreathAlgebra::new(&InputAlgebra::trivial(field, field.one()), m)
}

/// The Specht module `S^λ` over `group`, the group algebra of `S_|λ|` with basis indexed by permutations.
pub fn specht_module(shape: &Partition, group: &WreathAlgebra) -> Result<SpechtModule> {
    let m = shape.size();
    if m > MAX_SPECHT_SIZE {
        return Err(Error::SizeGuard(format!(
            "|λ| = {m} exceeds {MAX_SPECHT_SIZE}"
        )));
    }
    if group.input().dim() != 1 || group.strands() != m || group.block().is_some() {
        return Err(Error::KindMismatch(format!(
            "{} is not the group algebra of S{m}",
            group.algebra().name()
        )));
    }
    let f = group.algebra().field();
    let tableaux = Arc::new(standard_tableaux(shape));
    let model = Arc::new(PolytabloidModel::new(f, shape, &tableaux));
    let (g, mo) = (group.clone(), model.clone());
    let module = RightModule::from_fn(group.algebra(), tableaux.len(), move |i| {
        mo.act(&g.element(i).perm)
    });
    Ok(SpechtModule {
        shape: shape.clone(),
        tableaux,
        model,
        module,
    })
}

/// `S^λ ⊠ S^μ` over `R[S_a × S_b]` (the walled wreath algebra with block `a`).
pub fn outer_product(
    left: &SpechtModule,
    right: &SpechtModule,
    target: &WreathAlgebra,
) -> Result<RightModule> {
    let (a, b) = (left.shape.size(), right.shape.size());
    if target.block() != Some(a) || target.strands() != a + b {
        return Err(Error::KindMismatch(format!(
            "{} is not S{a}xS{b}",
            target.algebra().name()
        )));
    }
    let f = target.algebra().field().clone();
    let (l, r, t) = (left.clone(), right.clone(), target.clone());
    Ok(RightModule::from_fn(
        target.algebra(),
        left.dim() * right.dim(),
        move |i| {
            let perm = &t.element(i).perm;
            let lower: Vec<usize> = perm[a..].iter().map(|&x| x - a).collect();
            l.permutation_action(&perm[..a])
                .kron(&f, &r.permutation_action(&lower))
        },
    ))
}

#[derive(Clone, Debug, Serialize)]
pub struct DominanceRow {
    pub l: usize,
    #[serde(rename = "λ")]
    pub lambda: String,
    #[serde(rename = "μ")]
    pub mu: String,
    #[serde(rename = "λ′")]
    pub lambda_prime: String,
    #[serde(rename = "μ′")]
    pub mu_prime: String,
    #[serde(rename = "dimHom_big")]
    pub hom_big: usize,
    #[serde(rename = "dimHom_small")]
    pub hom_small: usize,
    #[serde(rename = "dimExt_big")]
    pub ext_big: usize,
    #[serde(rename = "dimExt_small")]
    pub ext_small: usize,
    #[serde(rename = "dominanceOK")]
    pub dominance_ok: bool,
    pub violation: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DominanceTable {
    pub r: usize,
    pub t: usize,
    pub l: usize,
    pub characteristic: u64,
    pub delta: String,
    /// Dominance is read as `⊵`; the strict reading fails on diagonal entries.
    pub dominance_reading: String,
    /// Whether Ext entries are checked (characteristic not 2 or 3).
    pub ext_checked: bool,
    pub rows: Vec<DominanceRow>,
}

impl DominanceTable {
    pub fn violations(&self) -> usize {
        self.rows.iter().filter(|r| r.violation).count()
    }

    /// No violation and every row agrees on both sides of the induction.
    pub fn passed(&self) -> bool {
        self.violations() == 0
            && self
                .rows
                .iter()
                .all(|r| r.hom_big == r.hom_small && r.ext_big == r.ext_small)
    }
}

/// Specht modules of the small algebra of `datum`: `S^λ ⊠ S^μ` for walled
/// kinds, `S^λ` for A-Brauer kinds with one-dimensional `A`.
pub fn cell_modules(datum: &CornerSplitDatum) -> Result<Vec<(Vec<Partition>, RightModule)>> {
    let small = &datum.quotient.small;
    let f = datum.field();
    match small.block() {
        Some(a) => {
            let b = small.strands() - a;
            let (ga, gb) = (symmetric_group_algebra(f, a), symmetric_group_algebra(f, b));
            let mut out = Vec::new();
            for lam in Partition::all(a) {
                let left = specht_module(&lam, &ga)?;
                for mu in Partition::all(b) {
                    let m = outer_product(&left, &specht_module(&mu, &gb)?, small)?;
                    out.push((vec![lam.clone(), mu], m));
                }
            }
            Ok(out)
        }
        None if small.input().dim() == 1 => Partition::all(small.strands())
            .into_iter()
            .map(|lam| {
                Ok((
                    vec![lam.clone()],
                    specht_module(&lam, small)?.module().clone(),
                ))
            })
            .collect(),
        None => Err(Error::KindMismatch(format!(
            "no Specht modules for {}",
            small.algebra().name()
        ))),
    }
}

fn label_text(parts: &[Partition]) -> String {
    parts.iter().join(";")
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TransferRow {
    pub source: String,
    pub target: String,
    pub hom_big: usize,
    pub hom_small: usize,
    pub ext_big: usize,
    pub ext_small: usize,
    pub agrees: bool,
}

struct CellPair<'a> {
    source: &'a [Partition],
    target: &'a [Partition],
    row: TransferRow,
}

fn transfer_pairs<'a>(
    datum: &CornerSplitDatum,
    cells: &'a [(Vec<Partition>, RightModule)],
) -> Result<Vec<CellPair<'a>>> {
    let induced = cells
        .iter()
        .map(|(_, m)| datum.induce(m).map(|x| x.0))
        .collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    for (i, (src, m)) in cells.iter().enumerate() {
        for (j, (tgt, n)) in cells.iter().enumerate() {
            let r = crate::split_pair::TransferReport {
                hom_big: hom_dim(&datum.big_fin, &induced[i], &induced[j]),
                hom_small: hom_dim(datum.small(), m, n),
                ext_big: ext1_dim(&datum.big_fin, &induced[i], &induced[j])?,
                ext_small: ext1_dim(datum.small(), m, n)?,
            };
            out.push(CellPair {
                source: src,
                target: tgt,
                row: TransferRow {
                    source: label_text(src),
                    target: label_text(tgt),
                    agrees: r.agrees(),
                    hom_big: r.hom_big,
                    hom_small: r.hom_small,
                    ext_big: r.ext_big,
                    ext_small: r.ext_small,
                },
            });
        }
    }
    Ok(out)
}

/// Hom and Ext¹ for every ordered pair of Specht modules, on both sides of the induction.
pub fn specht_transfer(datum: &CornerSplitDatum) -> Result<Vec<TransferRow>> {
    let cells = cell_modules(datum)?;
    Ok(transfer_pairs(datum, &cells)?
        .into_iter()
        .map(|p| p.row)
        .collect())
}

/// Hom and Ext¹ between induced Specht modules `ind_l S^{λ,μ}` over the
/// walled Brauer algebra with loop value 1, compared against dominance.
pub fn dominance_vanishing_experiment(
    field: &Field,
    r: usize,
    t: usize,
    l: usize,
    cap: usize,
) -> Result<DominanceTable> {
    let p = field.characteristic();
    if p == 2 {
        return Err(Error::ExcludedCharacteristic(2));
    }
    let alg = DiagramAlgebra::walled(field, r, t, field.one());
    let datum = CornerSplitDatum::new(&alg, l, None, cap)?;
    let cells = cell_modules(&datum)?;
    let ext_checked = p != 3;
    let mut rows = Vec::new();
    for pair in transfer_pairs(&datum, &cells)? {
        let (s, t) = (pair.source, pair.target);
        let dominance_ok =
            dominance(&s[0], &t[0])?.at_least() && dominance(&s[1], &t[1])?.at_least();
        let row = pair.row;
        rows.push(DominanceRow {
            l,
            lambda: s[0].to_string(),
            mu: s[1].to_string(),
            lambda_prime: t[0].to_string(),
            mu_prime: t[1].to_string(),
            violation: !dominance_ok && (row.hom_big > 0 || (ext_checked && row.ext_big > 0)),
            hom_big: row.hom_big,
            hom_small: row.hom_small,
            ext_big: row.ext_big,
            ext_small: row.ext_small,
            dominance_ok,
        });
    }
    Ok(DominanceTable {
        r,
        t,
        l,
        characteristic: p,
        delta: field.format(&field.one()),
        dominance_reading: "non-strict".into(),
        ext_checked,
        rows,
    })
}

/// The table as CSV with the fixed header.
pub fn dominance_csv(tables: &[DominanceTable]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in tables.iter().flat_map(|t| &t.rows) {
        w.serialize(row).map_err(|e| Error::Parse(e.to_string()))?;
    }
    if tables.iter().all(|t| t.rows.is_empty()) {
        w.write_record(CSV_HEADER)
            .map_err(|e| Error::Parse(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub const CSV_HEADER: [&str; 11] = [
    "l",
    "λ",
    "μ",
    "λ′",
    "μ′",
    "dimHom_big",
    "dimHom_small",
    "dimExt_big",
    "dimExt_small",
    "dominanceOK",
    "violation",
];

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Hook-length count of standard tableaux.
    fn hook_count(shape: &Partition) -> usize {
        let parts = shape.parts();
        let mut hooks = 1usize;
        for (i, &len) in parts.iter().enumerate() {
            for j in 0..len {
                let below = parts[i + 1..].iter().filter(|&&x| x > j).count();
                hooks *= len - j + below;
            }
        }
        (1..=shape.size()).product::<usize>() / hooks
    }

    #[test]
    fn dominance_examples() {
        assert_eq!(
            dominance(&p(&[2]), &p(&[1, 1])).unwrap(),
            Comparison::Greater
        );
        assert_eq!(
            dominance(&p(&[2, 1]), &p(&[2, 1])).unwrap(),
            Comparison::Equal
        );
        assert_eq!(
            dominance(&p(&[3, 1, 1]), &p(&[2, 2, 1])).unwrap(),
            Comparison::Greater
        );
        assert_eq!(
            dominance(&p(&[3, 1, 1, 1]), &p(&[2, 2, 2])).unwrap(),
            Comparison::Incomparable
        );
        assert!(dominance(&p(&[2]), &p(&[1])).is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::all(4).len(), 5);
        assert_eq!("(2,1)".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert_eq!("()".parse::<Partition>().unwrap().size(), 0);
    }

    #[test]
    fn layer_order_examples() {
        let deep = LayerLabel {
            layer: 1,
            parts: vec![p(&[1]), p(&[1])],
        };
        let top = LayerLabel {
            layer: 0,
            parts: vec![p(&[2]), p(&[2])],
        };
        assert_eq!(layer_order(&deep, &top).unwrap(), Comparison::Less);
        assert_eq!(layer_order(&top, &top).unwrap(), Comparison::Equal);
        let a = LayerLabel {
            layer: 0,
            parts: vec![p(&[2]), p(&[1, 1])],
        };
        let b = LayerLabel {
            layer: 0,
            parts: vec![p(&[1, 1]), p(&[2])],
        };
        assert_eq!(layer_order(&a, &b).unwrap(), Comparison::Incomparable);
        let c = LayerLabel {
            layer: 0,
            parts: vec![p(&[1, 1]), p(&[1, 1])],
        };
        assert_eq!(layer_order(&top, &c).unwrap(), Comparison::Less);
    }

    #[test]
    fn specht_dimensions_and_sums() {
        let q = Field::rationals();
        for m in 0..=5 {
            let g = symmetric_group_algebra(&q, m);
            let mut total = 0;
            for shape in Partition::all(m) {
                let s = specht_module(&shape, &g).unwrap();
                assert_eq!(s.dim(), hook_count(&shape), "{shape}");
                if m <= 4 {
                    assert!(s.module().axiom_witness(g.algebra(), 0).is_none());
                }
                total += s.dim() * s.dim();
            }
            assert_eq!(total, (1..=m).product::<usize>());
        }
        assert!(specht_module(&p(&[6]), &symmetric_group_algebra(&q, 6)).is_err());
    }

    #[test]
    fn sign_module() {
        let q = Field::rationals();
        let g = symmetric_group_algebra(&q, 2);
        let s = specht_module(&p(&[1, 1]), &g).unwrap();
        assert_eq!(s.permutation_action(&[1, 0]).get(&q, 0, 0), q.from_i64(-1));
        let triv = specht_module(&p(&[2]), &g).unwrap();
        assert_eq!(triv.permutation_action(&[1, 0]).get(&q, 0, 0), q.one());
    }

    #[test]
    fn outer_products() {
        let q = Field::rationals();
        let (g3, g2) = (
            symmetric_group_algebra(&q, 3),
            symmetric_group_algebra(&q, 2),
        );
        let w = WreathAlgebra::walled(&q, 3, 2);
        let l = specht_module(&p(&[2, 1]), &g3).unwrap();
        let r = specht_module(&p(&[1, 1]), &g2).unwrap();
        let m = outer_product(&l, &r, &w).unwrap();
        assert_eq!(m.dim(), 2);
        assert!(m.axiom_witness(w.algebra(), 0).is_none());
        let w22 = WreathAlgebra::walled(&q, 2, 2);
        let t = specht_module(&p(&[2]), &g2).unwrap();
        let s = specht_module(&p(&[1, 1]), &g2).unwrap();
        let tt = outer_product(&t, &t, &w22).unwrap();
        let ts = outer_product(&t, &s, &w22).unwrap();
        assert_eq!(hom_dim(w22.algebra(), &tt, &tt), 1);
        assert_eq!(hom_dim(w22.algebra(), &tt, &ts), 0);
    }

    #[test]
    fn walled_tables() {
        let q = Field::rationals();
        let t0 = dominance_vanishing_experiment(&q, 2, 2, 0, 2000).unwrap();
        assert!(t0.passed());
        for row in &t0.rows {
            let diagonal = row.lambda == row.lambda_prime && row.mu == row.mu_prime;
            assert_eq!(row.hom_big, usize::from(diagonal));
            assert_eq!(row.ext_big, 0);
        }
        let t1 = dominance_vanishing_experiment(&q, 2, 2, 1, 2000).unwrap();
        assert_eq!(t1.rows.len(), 1);
        assert_eq!(t1.rows[0].hom_big, 1);
        let f5 = Field::prime(5).unwrap();
        let t5 = dominance_vanishing_experiment(&f5, 2, 2, 0, 2000).unwrap();
        let dims = |t: &DominanceTable| {
            t.rows
                .iter()
                .map(|r| (r.hom_big, r.ext_big))
                .collect::<Vec<_>>()
        };
        assert_eq!(dims(&t0), dims(&t5));
        assert!(dominance_vanishing_experiment(&Field::prime(2).unwrap(), 2, 2, 0, 2000).is_err());
        let csv = dominance_csv(&[t1]).unwrap();
        assert_eq!(csv.lines().next().unwrap(), CSV_HEADER.join(","));
    }
}
