//! Free presentations and Ext¹.

use super::algebra::FinAlgebra;
use super::linalg::{Matrix, SparseVec, Subspace};
use super::module::{hom_space, RightModule};
use crate::error::Result;

/// A presentation `F_a --d--> F_b --cover--> M → 0` with `F_b` free on the basis of `M`.
#[derive(Clone, Debug)]
pub struct FreePresentation {
    /// Rank of the free cover (equal to `dim M`).
    pub rank_cover: usize,
    /// Number of generators chosen for the kernel.
    pub rank_relations: usize,
    /// `F_b → M`, rows indexed by `(generator, algebra basis)`.
    pub cover: Matrix,
    /// The kernel of `cover` inside `F_b`.
    pub kernel: Subspace,
    pub free_module: RightModule,
    /// `F_a → F_b`, rows indexed by `(relation, algebra basis)`.
    pub d: Matrix,
}

impl FreePresentation {
    /// Whether `image(d) = ker(cover)` and `cover` is onto.
    pub fn is_exact(&self, algebra: &FinAlgebra) -> bool {
        let f = algebra.field();
        let image = Subspace::from_vectors(f, self.cover.rows, self.d.data.iter().cloned());
        image.dim() == self.kernel.dim()
            && self.kernel.contains_subspace(f, &image)
            && self.cover.rank(f) == self.cover.cols
    }
}

/// Rank-`b` free module with `(i, c)` at index `i·dim A + c`.
pub fn free_module(algebra: &FinAlgebra, rank: usize) -> RightModule {
    RightModule::direct_sum(algebra, &vec![RightModule::regular(algebra); rank])
}

pub fn free_presentation(algebra: &FinAlgebra, m: &RightModule) -> Result<FreePresentation> {
    m.ensure_over(algebra)?;
    let f = algebra.field();
    let (b, da) = (m.dim(), algebra.dim());
    let rows: Vec<SparseVec> = (0..b)
        .flat_map(|i| (0..da).map(move |c| (i, c)))
        .map(|(i, c)| m.action(c).data[i].clone())
        .collect();
    let cover = Matrix::from_rows(b, rows);
    let kernel = Subspace::from_vectors(f, b * da, cover.left_kernel(f));
    let free = free_module(algebra, b);
    // Greedy kernel generators: keep basis vectors not yet in the generated submodule.
    let mut chosen: Vec<SparseVec> = Vec::new();
    let mut generated = Subspace::zero(b * da);
    for v in kernel.basis() {
        if generated.dim() == kernel.dim() {
            break;
        }
        if !generated.contains(f, v) {
            chosen.push(v.clone());
            generated = free.generated_submodule(algebra, &chosen);
        }
    }
    let d_rows = chosen
        .iter()
        .flat_map(|k| (0..da).map(|c| free.act(k, &algebra.basis(c))))
        .collect();
    let d = Matrix::from_rows(b * da, d_rows);
    Ok(FreePresentation {
        rank_cover: b,
        rank_relations: chosen.len(),
        cover,
        kernel,
        free_module: free,
        d,
    })
}

/// `dim Ext¹(M, N) = dim Hom(ΩM, N) − rank(Hom(F, N) → Hom(ΩM, N))`.
pub fn ext1_dim(algebra: &FinAlgebra, m: &RightModule, n: &RightModule) -> Result<usize> {
    n.ensure_over(algebra)?;
    let pres = free_presentation(algebra, m)?;
    let f = algebra.field();
    let (omega, inclusion) = pres.free_module.submodule(algebra, &pres.kernel)?;
    let hom_k = hom_space(algebra, &omega, n).len();
    if hom_k == 0 {
        return Ok(0);
    }
    let (b, da, dn) = (m.dim(), algebra.dim(), n.dim());
    let mut restricted = Vec::with_capacity(b * dn);
    for i in 0..b {
        for v in 0..dn {
            // The map F → N sending generator i to basis vector v of N.
            let mut rows = vec![Vec::new(); b * da];
            for c in 0..da {
                rows[i * da + c] = n.action(c).data[v].clone();
            }
            let phi = Matrix::from_rows(dn, rows);
            let r = inclusion.mul(f, &phi);
            let flat: SparseVec = r
                .data
                .iter()
                .enumerate()
                .flat_map(|(k, row)| row.iter().map(move |(j, x)| (k * dn + j, x.clone())))
                .collect();
            restricted.push(flat);
        }
    }
    let image = Subspace::from_vectors(f, omega.dim() * dn, restricted);
    Ok(hom_k - image.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::linalg::unit_vector;
    use crate::scalars::Field;

    fn cyclic(f: &Field, p: usize) -> FinAlgebra {
        let f2 = f.clone();
        let labels = (0..p).map(|i| format!("g{i}")).collect();
        FinAlgebra::from_fn(
            "cyclic",
            f.clone(),
            labels,
            unit_vector(f, 0),
            move |i, j| unit_vector(&f2, (i + j) % p),
        )
        .with_generators(vec![unit_vector(f, 1)])
    }

    fn trivial(alg: &FinAlgebra) -> RightModule {
        let f = alg.field().clone();
        RightModule::from_fn(alg, 1, move |_| Matrix::identity(&f, 1))
    }

    #[test]
    fn modular_cyclic_group_has_self_extension() {
        let f = Field::prime(3).unwrap();
        let a = cyclic(&f, 3);
        let t = trivial(&a);
        let pres = free_presentation(&a, &t).unwrap();
        assert_eq!(pres.kernel.dim(), 2);
        assert!(pres.is_exact(&a));
        assert_eq!(ext1_dim(&a, &t, &t).unwrap(), 1);
        let reg = RightModule::regular(&a);
        assert_eq!(ext1_dim(&a, &reg, &t).unwrap(), 0);
    }

    #[test]
    fn semisimple_case_vanishes() {
        let f = Field::rationals();
        let a = cyclic(&f, 3);
        let t = trivial(&a);
        assert_eq!(ext1_dim(&a, &t, &t).unwrap(), 0);
        let pres = free_presentation(&a, &RightModule::regular(&a)).unwrap();
        assert_eq!(pres.rank_cover * 3 - pres.kernel.dim(), 3);
    }
}
