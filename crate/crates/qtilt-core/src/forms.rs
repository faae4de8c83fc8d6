//! Euler and Tits quadratic forms, quasi-Cartan companions, exact positivity
//! and the sign condition for admissible cuts.

use crate::error::{Error, Result};
use crate::exactlin::Mat;
use crate::quiver::{chordless_cycles, Presentation, Quiver};
use crate::{rat, Rat, RatMatrix};
use num_traits::{Signed, Zero};

/// Symmetric exact-rational matrix with all diagonal entries equal to 2.
#[derive(Debug, Clone, PartialEq)]
pub struct QuasiCartan {
    pub matrix: RatMatrix,
}

impl QuasiCartan {
    pub fn new(matrix: RatMatrix) -> Result<Self> {
        let n = matrix.rows();
        if matrix.cols() != n {
            return Err(Error::DimensionMismatch("quasi-Cartan must be square".into()));
        }
        for i in 0..n {
            if *matrix.at(i, i) != rat(2) {
                return Err(Error::InvalidPresentation(
                    "quasi-Cartan diagonal entry differs from 2".into(),
                ));
            }
            for j in 0..i {
                if matrix.at(i, j) != matrix.at(j, i) {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        Ok(QuasiCartan { matrix })
    }

    /// Evaluate the quadratic form q(x) = (1/2) x^T A x.
    pub fn eval(&self, x: &[Rat]) -> Result<Rat> {
        let ax = self.matrix.mul_vec(x)?;
        let mut acc = Rat::zero();
        for (xi, axi) in x.iter().zip(ax) {
            acc = acc + xi * axi;
        }
        Ok(acc / rat(2))
    }
}

/// The non-symmetric Euler bilinear form of a hereditary path algebra:
/// `<e_i, e_j> = delta_ij - #(arrows i -> j)`. For hereditary algebras
/// `dim Hom(M,N) - dim Ext^1(M,N) = <dim M, dim N>`.
pub fn euler_form_hereditary(q: &Quiver) -> Result<RatMatrix> {
    if !q.is_acyclic() {
        return Err(Error::CyclicQuiver);
    }
    let n = q.n_vertices();
    let mut m = RatMatrix::identity(n);
    for a in &q.arrows {
        let v = m.at(a.source, a.target).clone() - rat(1);
        m.set(a.source, a.target, v);
    }
    Ok(m)
}

pub fn euler_pairing(form: &RatMatrix, x: &[Rat], y: &[Rat]) -> Result<Rat> {
    let fy = form.mul_vec(y)?;
    let mut acc = Rat::zero();
    for (xi, fyi) in x.iter().zip(fy) {
        acc = acc + xi * fyi;
    }
    Ok(acc)
}

/// The Tits (geometric) form of a presentation with gldim <= 2:
/// `q_B(x) = sum x_i^2 - sum_arrows x_s x_t + sum ext2[i][j] x_i x_j`,
/// where `ext2[i][j] = dim Ext^2(S_i, S_j)` must come from actual resolutions.
/// Returns the symmetric quasi-Cartan companion A with `q_B(x) = 1/2 x^T A x`.
pub fn tits_form(p: &Presentation, ext2_dims: &[Vec<usize>]) -> Result<QuasiCartan> {
    let n = p.quiver.n_vertices();
    if ext2_dims.len() != n || ext2_dims.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch("ext2 matrix shape".into()));
    }
    let mut a = RatMatrix::zeros(n, n);
    for i in 0..n {
        a.set(i, i, rat(2) + rat(2) * rat(ext2_dims[i][i] as i64));
    }
    for arrow in &p.quiver.arrows {
        let (s, t) = (arrow.source, arrow.target);
        let v = a.at(s, t).clone() - rat(1);
        a.set(s, t, v.clone());
        a.set(t, s, v);
    }
    for (i, row) in ext2_dims.iter().enumerate() {
        for (j, &d) in row.iter().enumerate() {
            if i == j || d == 0 {
                continue;
            }
            let v = a.at(i, j).clone() + rat(d as i64);
            a.set(i, j, v.clone());
            a.set(j, i, v);
        }
    }
    QuasiCartan::new(a)
}

/// Sylvester criterion on exact leading principal minors.
pub fn is_positive_definite(a: &QuasiCartan) -> bool {
    a.matrix
        .leading_principal_minors()
        .map(|ms| ms.iter().all(|m| m.is_positive()))
        .unwrap_or(false)
}

/// Sign condition: in each oriented chordless cycle of the quiver there is
/// precisely one arrow `i -> j` with `A_ij = 1` (positive); all other arrows
/// of the cycle must carry negative entries. Requires `|A_ij|` to match the
/// number of arrows between `i` and `j`.
pub fn sign_condition_check(q: &Quiver, a: &QuasiCartan) -> Result<bool> {
    let n = q.n_vertices();
    if a.matrix.rows() != n {
        return Err(Error::CompanionMismatch("size differs from vertex count".into()));
    }
    for i in 0..n {
        for j in 0..i {
            let arrows = q.arrows_between(i, j).len();
            if a.matrix.at(i, j).abs() != rat(arrows as i64) {
                return Err(Error::CompanionMismatch(format!(
                    "|A[{i}][{j}]| = {} but the quiver has {arrows} arrows between them",
                    a.matrix.at(i, j).abs()
                )));
            }
        }
    }
    for cycle in chordless_cycles(q).iter().filter(|c| c.oriented) {
        let positive = cycle
            .arrows
            .iter()
            .filter(|&&ar| {
                let arr = &q.arrows[ar];
                a.matrix.at(arr.source, arr.target).is_positive()
            })
            .count();
        if positive != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::parse_presentation;

    #[test]
    fn euler_form_a2() {
        let q = Quiver::from_arrows("a2", &["1", "2"], &[("a", "1", "2")]);
        let f = euler_form_hereditary(&q).unwrap();
        // <dim P1, dim S1> = 1
        assert_eq!(euler_pairing(&f, &[rat(1), rat(1)], &[rat(1), rat(0)]).unwrap(), rat(1));
        // <dim S1, dim S2> = -1
        assert_eq!(euler_pairing(&f, &[rat(1), rat(0)], &[rat(0), rat(1)]).unwrap(), -rat(1));
        // <e_i, e_i> = 1
        assert_eq!(euler_pairing(&f, &[rat(1), rat(0)], &[rat(1), rat(0)]).unwrap(), rat(1));
    }

    #[test]
    fn euler_form_rejects_cycles() {
        let q = crate::quiver::tests::three_cycle();
        assert!(matches!(euler_form_hereditary(&q), Err(Error::CyclicQuiver)));
    }

    #[test]
    fn tits_form_hereditary_a3_positive_definite() {
        let p = parse_presentation("quiver a3\nvertices 1 2 3\narrows\na: 1 -> 2\nb: 2 -> 3\n")
            .unwrap();
        let ext2 = vec![vec![0; 3]; 3];
        let qc = tits_form(&p, &ext2).unwrap();
        assert!(is_positive_definite(&qc));
        // symmetrization of the Euler form
        let e = euler_form_hereditary(&p.quiver).unwrap();
        let sym = e.add(&e.transpose()).unwrap();
        assert_eq!(qc.matrix, sym);
    }

    #[test]
    fn tits_form_a3_one_relation() {
        let p = parse_presentation(
            "quiver a3\nvertices 1 2 3\narrows\na: 1 -> 2\nb: 2 -> 3\nrelations\nb*a\n",
        )
        .unwrap();
        let mut ext2 = vec![vec![0; 3]; 3];
        ext2[0][2] = 1; // the zero relation 1 -> 3
        let qc = tits_form(&p, &ext2).unwrap();
        let expected = RatMatrix::from_rows(vec![
            vec![rat(2), -rat(1), rat(1)],
            vec![-rat(1), rat(2), -rat(1)],
            vec![rat(1), -rat(1), rat(2)],
        ]);
        assert_eq!(qc.matrix, expected);
        assert_eq!(
            qc.matrix.leading_principal_minors().unwrap(),
            vec![rat(2), rat(3), rat(4)]
        );
        assert!(is_positive_definite(&qc));
    }

    #[test]
    fn kronecker_not_positive_definite() {
        let m = RatMatrix::from_rows(vec![vec![rat(2), -rat(2)], vec![-rat(2), rat(2)]]);
        let qc = QuasiCartan::new(m).unwrap();
        assert!(!is_positive_definite(&qc));
    }

    #[test]
    fn sign_condition_on_three_cycle() {
        let q = crate::quiver::tests::three_cycle();
        // companion from an admissible cut: one positive entry on the cycle
        let good = QuasiCartan::new(RatMatrix::from_rows(vec![
            vec![rat(2), -rat(1), rat(1)],
            vec![-rat(1), rat(2), -rat(1)],
            vec![rat(1), -rat(1), rat(2)],
        ]))
        .unwrap();
        assert!(sign_condition_check(&q, &good).unwrap());
        let bad = QuasiCartan::new(RatMatrix::from_rows(vec![
            vec![rat(2), -rat(1), -rat(1)],
            vec![-rat(1), rat(2), -rat(1)],
            vec![-rat(1), -rat(1), rat(2)],
        ]))
        .unwrap();
        assert!(!sign_condition_check(&q, &bad).unwrap());
    }

    #[test]
    fn sign_condition_vacuous_on_acyclic() {
        let q = Quiver::from_arrows("a2", &["1", "2"], &[("a", "1", "2")]);
        let qc = QuasiCartan::new(RatMatrix::from_rows(vec![
            vec![rat(2), -rat(1)],
            vec![-rat(1), rat(2)],
        ]))
        .unwrap();
        assert!(sign_condition_check(&q, &qc).unwrap());
    }

    #[test]
    fn companion_mismatch_detected() {
        let q = Quiver::from_arrows("a2", &["1", "2"], &[("a", "1", "2")]);
        let qc = QuasiCartan::new(RatMatrix::from_rows(vec![
            vec![rat(2), rat(0)],
            vec![rat(0), rat(2)],
        ]))
        .unwrap();
        assert!(matches!(
            sign_condition_check(&q, &qc),
            Err(Error::CompanionMismatch(_))
        ));
    }
}
