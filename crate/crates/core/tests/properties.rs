use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use smbraid::phi::{Phi, PhiParams};
use smbraid::random;
use smbraid::reps::{burau_reduced, burau_unreduced, permutation_rep};
use smbraid::words::{lemma9_decompose, sm2_normal_form, to_sigma1_x_generators};
use smbraid::{PhiMap, Value};

fn birman(rep: smbraid::Rep) -> PhiMap {
    Phi::new(rep, PhiParams::from_i64(1, -1, 0)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    // Formal and matrix backends decide image equality identically.
    #[test]
    fn formal_and_matrix_backends_agree(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let matrix = birman(burau_reduced::<Value>(3).unwrap());
        let formal = birman(burau_reduced::<Value>(3).unwrap().into_formal().unwrap());
        let w1 = random::sm_word(&mut rng, 3, 5);
        let w2 = random::sm_word(&mut rng, 3, 5);
        let by_matrix = matrix.eval(&w1).unwrap() == matrix.eval(&w2).unwrap();
        let by_formal = formal.eval(&w1).unwrap() == formal.eval(&w2).unwrap();
        prop_assert_eq!(by_matrix, by_formal);
    }

    // Φ is multiplicative on concatenation for random parameters.
    #[test]
    fn eval_is_multiplicative(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let f = Phi::new(burau_unreduced::<Value>(3).unwrap(), random::params(&mut rng)).unwrap();
        let u = random::sm_word(&mut rng, 3, 6);
        let v = random::sm_word(&mut rng, 3, 6);
        let backend = f.rep().backend();
        let product = backend.mul(&f.eval(&u).unwrap(), &f.eval(&v).unwrap()).unwrap();
        prop_assert_eq!(f.eval(&u.concat(&v)).unwrap(), product);
    }

    // On two strands, equal normal forms give equal images.
    #[test]
    fn sm2_normal_form_determines_image(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let f = Phi::new(burau_unreduced::<Value>(2).unwrap(), random::params(&mut rng)).unwrap();
        let w = random::sm_word(&mut rng, 2, 8);
        let nf = sm2_normal_form(&w).unwrap();
        let canonical = smbraid::words::SmWord::tau_sigma(2, nf.p, nf.q);
        prop_assert_eq!(f.eval(&w).unwrap(), f.eval(&canonical).unwrap());
    }

    // Rewritten words keep their images in SM_4 too.
    #[test]
    fn rewriting_preserves_images_on_four_strands(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let f = birman(permutation_rep::<Value>(4).unwrap());
        let w = random::sm_word(&mut rng, 4, 8);
        let img = f.eval(&w).unwrap();
        prop_assert_eq!(f.eval(&lemma9_decompose(&w).assemble()).unwrap(), img.clone());
        prop_assert_eq!(f.eval(&to_sigma1_x_generators(&w).expand()).unwrap(), img);
    }
}
