use std::sync::Arc;

use crate::carrier::Carrier;
use crate::error::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AutomorphismRule {
    Identity,
    /// `x -> g x g^-1` for the element at this index.
    Inner(usize),
    /// `x -> x^k`.
    PowerMap(i64),
    /// Explicit images by carrier index.
    Table(Vec<usize>),
}

/// A validated automorphism of a group carrier, stored as an index permutation.
#[derive(Debug, Clone)]
pub struct GroupAutomorphism {
    carrier: Arc<Carrier>,
    image: Vec<usize>,
}

impl GroupAutomorphism {
    pub fn carrier(&self) -> &Arc<Carrier> {
        &self.carrier
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &j)| i == j)
    }
}

pub fn make_automorphism(g: &Arc<Carrier>, rule: AutomorphismRule) -> Result<GroupAutomorphism, AlgebraError> {
    let grp = g.require_group()?;
    let n = g.len();
    let image: Vec<usize> = match rule {
        AutomorphismRule::Identity => (0..n).collect(),
        AutomorphismRule::Inner(h) => {
            if h >= n {
                return Err(AlgebraError::NotInCarrier(format!("index {h}")));
            }
            let hinv = grp.inv(h);
            (0..n).map(|x| grp.mul(grp.mul(h, x), hinv)).collect()
        }
        AutomorphismRule::PowerMap(k) => (0..n).map(|x| grp.pow(x, k)).collect(),
        AutomorphismRule::Table(t) => {
            if t.len() != n {
                return Err(AlgebraError::DimensionMismatch { left: n, right: t.len() });
            }
            if let Some(&bad) = t.iter().find(|&&j| j >= n) {
                return Err(AlgebraError::NotInCarrier(format!("index {bad}")));
            }
            t
        }
    };

    let mut preimage = vec![usize::MAX; n];
    for (x, &y) in image.iter().enumerate() {
        if preimage[y] != usize::MAX {
            return Err(AlgebraError::NotBijective(g.element(preimage[y]).to_string(), g.element(x).to_string()));
        }
        preimage[y] = x;
    }
    for a in 0..n {
        for b in 0..n {
            if image[grp.mul(a, b)] != grp.mul(image[a], image[b]) {
                return Err(AlgebraError::NotHomomorphism(g.element(a).to_string(), g.element(b).to_string()));
            }
        }
    }
    Ok(GroupAutomorphism { carrier: g.clone(), image })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::{group_carrier, GroupSpec};
    use crate::element::Element;

    #[test]
    fn identity_on_s3() {
        let s3 = group_carrier(&GroupSpec::Symmetric(3)).unwrap();
        let phi = make_automorphism(&s3, AutomorphismRule::Identity).unwrap();
        assert!(phi.is_identity());
    }

    #[test]
    fn inner_by_transposition_on_s3() {
        let s3 = group_carrier(&GroupSpec::Symmetric(3)).unwrap();
        let t12 = s3.index_of(&Element::Perm(vec![1, 0, 2])).unwrap();
        let phi = make_automorphism(&s3, AutomorphismRule::Inner(t12)).unwrap();
        assert!(!phi.is_identity());
        // independent homomorphism check through element composition
        let compose = |a: &[u8], b: &[u8]| -> Vec<u8> { b.iter().map(|&i| a[i as usize]).collect() };
        for a in 0..6 {
            for b in 0..6 {
                let pa = s3.element(a).as_perm().unwrap();
                let pb = s3.element(b).as_perm().unwrap();
                let ab = s3.index_of(&Element::Perm(compose(pa, pb))).unwrap();
                let lhs = s3.element(phi.apply(ab)).as_perm().unwrap().to_vec();
                let rhs =
                    compose(s3.element(phi.apply(a)).as_perm().unwrap(), s3.element(phi.apply(b)).as_perm().unwrap());
                assert_eq!(lhs, rhs);
            }
        }
        let grp = s3.group().unwrap();
        assert_eq!(phi.apply(grp.identity()), grp.identity());
    }

    #[test]
    fn doubling_on_z4_is_not_bijective() {
        let z4 = group_carrier(&GroupSpec::Cyclic(4)).unwrap();
        let err = make_automorphism(&z4, AutomorphismRule::PowerMap(2)).unwrap_err();
        assert!(matches!(err, AlgebraError::NotBijective(_, _)));
    }

    #[test]
    fn doubling_on_z5_is_an_automorphism() {
        let z5 = group_carrier(&GroupSpec::Cyclic(5)).unwrap();
        let phi = make_automorphism(&z5, AutomorphismRule::PowerMap(2)).unwrap();
        assert_eq!(phi.image(), &[0, 2, 4, 1, 3]);
    }

    #[test]
    fn squaring_on_s3_is_rejected() {
        let s3 = group_carrier(&GroupSpec::Symmetric(3)).unwrap();
        assert!(make_automorphism(&s3, AutomorphismRule::PowerMap(2)).is_err());
    }

    #[test]
    fn table_rule_checks_homomorphism() {
        let z3 = group_carrier(&GroupSpec::Cyclic(3)).unwrap();
        assert!(make_automorphism(&z3, AutomorphismRule::Table(vec![0, 2, 1])).is_ok());
        let err = make_automorphism(&z3, AutomorphismRule::Table(vec![1, 0, 2])).unwrap_err();
        assert!(matches!(err, AlgebraError::NotHomomorphism(_, _)));
    }
}
