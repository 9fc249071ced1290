use super::{rational_points, JordanType, OperatorFamily};
use crate::field::{check_generic_rank, ffge, form_gcd_factor, root_evaluations, BinaryForm, Field, RootEvaluation};
use crate::module::{Module, Sl2Module};
use serde::Serialize;

/// Generic rank of `θ^j` with its pivot minor and the rank at every root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct RankCertificate<F: Field> {
    pub j: usize,
    pub generic_rank: usize,
    pub minor: BinaryForm<F>,
    pub factors: Vec<(BinaryForm<F>, usize)>,
    pub evaluations: Vec<RootEvaluation<F>>,
    /// No root has smaller rank.
    pub constant: bool,
}

impl<F: Field> RankCertificate<F> {
    pub fn drops(&self) -> impl Iterator<Item = &RootEvaluation<F>> {
        self.evaluations.iter().filter(|e| e.rank < self.generic_rank)
    }
}

fn rank_certificate<F: Field>(fam: &OperatorFamily<F>, j: usize, seed: u64) -> RankCertificate<F> {
    let m = fam.power(j);
    let res = ffge(m);
    if res.rank == 0 {
        return RankCertificate { j, generic_rank: 0, minor: res.minor, factors: Vec::new(), evaluations: Vec::new(), constant: true };
    }
    check_generic_rank(m, res.rank, &res.minor, seed).expect("elimination rank is the generic rank");
    let (_, factors) = form_gcd_factor(std::slice::from_ref(&res.minor)).expect("minor is nonzero");
    let evaluations = root_evaluations(m, &res.minor).expect("minor is nonzero");
    assert!(evaluations.iter().all(|e| e.rank <= res.rank), "rank at a root exceeds the generic rank");
    let constant = evaluations.iter().all(|e| e.rank == res.rank);
    RankCertificate { j, generic_rank: res.rank, minor: res.minor, factors, evaluations, constant }
}

/// Constant-rank certificates for every `j` and the resulting CJT verdict.
#[derive(Clone, Debug, Serialize)]
#[serde(bound = "")]
pub struct ConstancyReport<F: Field> {
    pub certificates: Vec<RankCertificate<F>>,
    pub cjt: bool,
    pub generic_jordan_type: JordanType,
}

impl<F: Field> ConstancyReport<F> {
    pub fn for_family(fam: &OperatorFamily<F>, seed: u64) -> Self {
        let p = F::CHAR as usize;
        let certificates: Vec<_> = (1..p).map(|j| rank_certificate(fam, j, seed)).collect();
        let ranks: Vec<usize> = certificates.iter().map(|c| c.generic_rank).collect();
        let cjt = certificates.iter().all(|c| c.constant);
        ConstancyReport { certificates, cjt, generic_jordan_type: JordanType::from_ranks(F::CHAR, fam.dim(), &ranks) }
    }

    pub fn constant_rank(&self, j: usize) -> bool {
        self.certificates[j - 1].constant
    }

    pub fn generic_ranks(&self) -> Vec<usize> {
        self.certificates.iter().map(|c| c.generic_rank).collect()
    }
}

pub fn constancy_certificates<F: Field>(m: &Module<F>) -> ConstancyReport<F> {
    ConstancyReport::for_family(&OperatorFamily::for_module(m), 0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CertificateKind {
    ConstantJRank(usize),
    Cjt,
    Eip(usize),
    Ekp,
}

#[derive(Clone, Debug, Serialize)]
#[serde(bound = "")]
pub struct Certificate<F: Field> {
    pub kind: CertificateKind,
    /// The set of points the verdict quantifies over.
    pub domain: String,
    pub generic_ranks: Vec<usize>,
    pub rank_certificates: Vec<RankCertificate<F>>,
    /// Per `j`: the dimension the image (EIP) or the common kernel (EKP)
    /// must reach.
    pub targets: Vec<usize>,
    /// Per `j`: the achieved dimension `Σ im C_k` or `dim ∩ ker C_k`.
    pub achieved: Vec<usize>,
    /// Echelon bases of the constant kernels (EKP only), entries as indices.
    pub kernels: Vec<Vec<Vec<u64>>>,
    /// A rational point refuting the property.
    pub witness: Option<String>,
    pub verdict: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(bound = "")]
pub struct EipResult<F: Field> {
    pub eip: bool,
    pub class: usize,
    pub certificate: Certificate<F>,
}

const LINEAR_DOMAIN: &str = "all closed points [a:b] of P^1 over the algebraic closure, operators aX+bY";
const NULLCONE_DOMAIN: &str = "projectivised nullcone of sl(2) via [u:v] -> u^2 e + uv h - v^2 f, all closed points";

fn describe_point<F: Field>(a: F, b: F) -> String {
    format!("[{}:{}]", a.index(), b.index())
}

/// Equal images for a family whose image at every point lies in a space of
/// dimension `targets[j-1]`, namely `Σ_k im C_k`.
pub fn is_eip_family<F: Field>(fam: &OperatorFamily<F>, domain: &str, seed: u64) -> EipResult<F> {
    let p = F::CHAR as usize;
    let targets: Vec<usize> = (1..p).map(|j| fam.image_sum_dim(j)).collect();
    for (a, b) in rational_points::<F>() {
        let ranks = fam.ranks_at(a, b);
        if let Some(j) = (0..p - 1).find(|&j| ranks[j] < targets[j]) {
            let jt = JordanType::from_ranks(F::CHAR, fam.dim(), &ranks);
            let certificate = Certificate {
                kind: CertificateKind::Eip(jt.max_block().max(1)),
                domain: domain.to_string(),
                generic_ranks: Vec::new(),
                rank_certificates: Vec::new(),
                targets: targets.clone(),
                achieved: ranks.clone(),
                kernels: Vec::new(),
                witness: Some(format!("rank of theta^{} at {} is {} < {}", j + 1, describe_point(a, b), ranks[j], targets[j])),
                verdict: false,
            };
            return EipResult { eip: false, class: jt.max_block().max(1), certificate };
        }
    }
    let rep = ConstancyReport::for_family(fam, seed);
    let generic = rep.generic_ranks();
    let eip = rep.cjt && generic == targets;
    let class = rep.generic_jordan_type.max_block().max(1);
    let certificate = Certificate {
        kind: CertificateKind::Eip(class),
        domain: domain.to_string(),
        generic_ranks: generic.clone(),
        rank_certificates: rep.certificates,
        targets,
        achieved: generic,
        kernels: Vec::new(),
        witness: None,
        verdict: eip,
    };
    EipResult { eip, class, certificate }
}

/// Equal kernels: constant rank and `dim ∩_k ker C_k = n - r_j` for all `j`.
pub fn is_ekp_family<F: Field>(fam: &OperatorFamily<F>, domain: &str, seed: u64) -> Certificate<F> {
    let p = F::CHAR as usize;
    let n = fam.dim();
    let rep = ConstancyReport::for_family(fam, seed);
    let generic = rep.generic_ranks();
    let targets: Vec<usize> = generic.iter().map(|r| n - r).collect();
    let kernels: Vec<_> = (1..p).map(|j| fam.common_kernel(j)).collect();
    let achieved: Vec<usize> = kernels.iter().map(|k| k.rows()).collect();
    let verdict = rep.cjt && achieved == targets;
    Certificate {
        kind: CertificateKind::Ekp,
        domain: domain.to_string(),
        generic_ranks: generic,
        rank_certificates: rep.certificates,
        targets,
        achieved,
        kernels: kernels.iter().map(|k| k.to_ints().into_iter().map(|r| r.into_iter().map(|v| v as u64).collect()).collect()).collect(),
        witness: None,
        verdict,
    }
}

pub fn is_eip<F: Field>(m: &Module<F>) -> EipResult<F> {
    is_eip_family(&OperatorFamily::for_module(m), LINEAR_DOMAIN, 0)
}

pub fn is_ekp<F: Field>(m: &Module<F>) -> Certificate<F> {
    is_ekp_family(&OperatorFamily::for_module(m), LINEAR_DOMAIN, 0)
}

/// Generic Jordan type over the nullcone and the CJT certificate.
pub fn sl2_generic_jordan_type<F: Field>(m: &Sl2Module<F>) -> (JordanType, Certificate<F>) {
    let fam = OperatorFamily::for_sl2(m);
    let rep = ConstancyReport::for_family(&fam, 0);
    let generic = rep.generic_ranks();
    let cert = Certificate {
        kind: CertificateKind::Cjt,
        domain: NULLCONE_DOMAIN.to_string(),
        generic_ranks: generic.clone(),
        rank_certificates: rep.certificates,
        targets: generic.clone(),
        achieved: generic,
        kernels: Vec::new(),
        witness: None,
        verdict: rep.cjt,
    };
    (rep.generic_jordan_type, cert)
}

pub fn sl2_is_eip<F: Field>(m: &Sl2Module<F>) -> EipResult<F> {
    is_eip_family(&OperatorFamily::for_sl2(m), NULLCONE_DOMAIN, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Matrix;
    use crate::F3;

    fn kxy2() -> Module<F3> {
        Module::new(Matrix::zeros(2, 2), Matrix::from_ints(&[vec![0, 0], vec![1, 0]]), None).unwrap()
    }

    #[test]
    fn truncated_line_drops_at_infinity() {
        let rep = constancy_certificates(&kxy2());
        assert!(!rep.constant_rank(1));
        assert!(!rep.cjt);
    }

    #[test]
    fn zero_module_is_eip() {
        let r = is_eip(&Module::<F3>::zero());
        assert!(r.eip);
        assert_eq!(r.class, 1);
    }
}
