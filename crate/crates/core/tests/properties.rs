use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use octosigma::algebra::{associator, Octonion};
use octosigma::gamma::{kron, SquareMatrix};
use octosigma::scalar::{gauss, ratio, Rational};
use octosigma::split::{embed_basis, embed_basis_product, table, SplitOctonion};

fn random_octonion(rng: &mut StdRng) -> Octonion<Rational> {
    Octonion::new(std::array::from_fn(|_| ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3))))
}

#[test]
fn octonion_identities_on_random_samples() {
    let mut rng = StdRng::seed_from_u64(11);
    let zero = Octonion::<Rational>::zero();
    for _ in 0..1000 {
        let (a, b, c) = (random_octonion(&mut rng), random_octonion(&mut rng), random_octonion(&mut rng));
        assert_eq!(associator(&a, &a, &b), zero);
        assert_eq!(associator(&a, &b, &b), zero);
        assert_eq!(associator(&a, &b, &a), zero);
        assert_eq!(&(&(&a * &b) * &a) * &c, &a * &(&b * &(&a * &c)));
        assert_eq!((&a * &b).norm_sq(), a.norm_sq() * b.norm_sq());
    }
}

#[test]
fn split_table_is_the_tensor_image_away_from_known_entries() {
    let t = table();
    for a in 0..8 {
        for b in 0..8 {
            if [[2, 7], [7, 2]].contains(&[a, b]) {
                continue;
            }
            assert_eq!(&embed_basis(a) * &embed_basis(b), embed_basis_product(t[a][b]), "u{a}u{b}");
        }
    }
}

#[test]
fn split_norm_is_a_quadratic_form() {
    let mut rng = StdRng::seed_from_u64(12);
    for _ in 0..200 {
        let c: [Rational; 8] = std::array::from_fn(|_| ratio(rng.gen_range(-5..=5), rng.gen_range(1..=4)));
        let x = SplitOctonion::from_real(c.clone());
        let doubled = SplitOctonion::from_real(c.map(|v| v * ratio(2, 1)));
        assert_eq!(doubled.norm_sq(), x.norm_sq() * ratio(4, 1));
    }
}

#[test]
fn kron_is_bilinear_and_mixes_products() {
    let mut rng = StdRng::seed_from_u64(13);
    let m = |rng: &mut StdRng| {
        SquareMatrix::from_rows((0..2).map(|_| (0..2).map(|_| gauss(rng.gen_range(-3..=3), rng.gen_range(-3..=3))).collect()).collect())
            .unwrap()
    };
    for _ in 0..200 {
        let (a, b, c, d) = (m(&mut rng), m(&mut rng), m(&mut rng), m(&mut rng));
        assert_eq!(kron(&kron(&a, &b), &c), kron(&a, &kron(&b, &c)));
        assert_eq!(&kron(&a, &b) * &kron(&c, &d), kron(&(&a * &c), &(&b * &d)));
        assert_eq!(kron(&(&a + &c), &b), &kron(&a, &b) + &kron(&c, &b));
        let s = gauss(2, -1);
        assert_eq!(kron(&a.scale(&s), &b), kron(&a, &b).scale(&s));
    }
}
