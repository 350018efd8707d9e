//! Property tests for the exact-arithmetic layers: ring axioms on K-theory
//! classes, evaluation as a ring homomorphism, Smith normal form as an
//! exact factorization, and the quotient-basis construction.

use num_bigint::BigInt;
use proptest::prelude::*;

use toruschar_core::latquot::{self, IntMatrix};
use toruschar_core::KClass;

fn kclass_strategy() -> impl Strategy<Value = KClass> {
    prop::collection::vec(-50i64..50, 0..6).prop_map(KClass::from_coeffs)
}

proptest! {
    #[test]
    fn addition_is_commutative_and_associative(
        a in kclass_strategy(),
        b in kclass_strategy(),
        c in kclass_strategy(),
    ) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    }

    #[test]
    fn multiplication_distributes(
        a in kclass_strategy(),
        b in kclass_strategy(),
        c in kclass_strategy(),
    ) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn zero_and_one_are_neutral(a in kclass_strategy()) {
        prop_assert_eq!(&a + &KClass::zero(), a.clone());
        prop_assert_eq!(&a * &KClass::one(), a.clone());
        prop_assert_eq!(&a - &a, KClass::zero());
    }

    #[test]
    fn canonical_form_trims_trailing_zeros(a in kclass_strategy()) {
        // Rebuilding from the exposed coefficients is the identity.
        let rebuilt = KClass::from_coeffs(a.coeffs().to_vec());
        prop_assert_eq!(&rebuilt, &a);
        if let Some(d) = a.degree() {
            prop_assert!(a.coeff(d) != BigInt::from(0));
        } else {
            prop_assert!(a.is_zero());
        }
    }

    #[test]
    fn eval_is_a_ring_homomorphism(
        a in kclass_strategy(),
        b in kclass_strategy(),
        x in -20i64..20,
    ) {
        let x = BigInt::from(x);
        prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
    }

    #[test]
    fn degree_of_product_adds(a in kclass_strategy(), b in kclass_strategy()) {
        // ℤ[L] has no zero divisors.
        match (a.degree(), b.degree()) {
            (Some(da), Some(db)) => prop_assert_eq!((&a * &b).degree(), Some(da + db)),
            _ => prop_assert!((&a * &b).is_zero()),
        }
    }
}

fn matrix_strategy() -> impl Strategy<Value = IntMatrix> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(rows, cols)| {
        prop::collection::vec(-20i64..=20, rows * cols).prop_map(move |data| {
            let as_rows: Vec<Vec<i64>> =
                data.chunks(cols).map(|chunk| chunk.to_vec()).collect();
            IntMatrix::from_rows(&as_rows)
        })
    })
}

proptest! {
    #[test]
    fn snf_is_an_exact_factorization(m in matrix_strategy()) {
        let snf = latquot::smith_normal_form(&m);
        // U·M·V = D with unimodular U, V.
        prop_assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.d.clone());
        prop_assert!(snf.u.is_unimodular());
        prop_assert!(snf.v.is_unimodular());
        // D diagonal, nonnegative, with divisibility down the diagonal.
        let steps = snf.d.rows().min(snf.d.cols());
        for i in 0..snf.d.rows() {
            for j in 0..snf.d.cols() {
                if i != j {
                    prop_assert_eq!(snf.d.get(i, j), &BigInt::from(0));
                }
            }
        }
        let zero = BigInt::from(0);
        for t in 0..steps {
            prop_assert!(snf.d.get(t, t) >= &zero);
            if t + 1 < steps && snf.d.get(t + 1, t + 1) != &zero {
                prop_assert!(snf.d.get(t, t) != &zero);
                prop_assert_eq!(snf.d.get(t + 1, t + 1) % snf.d.get(t, t), zero.clone());
            }
        }
    }

    #[test]
    fn quotient_basis_always_verifies(
        weights in prop::collection::vec(-24i64..=24, 1..=5),
        r in 1u64..=12,
    ) {
        let q = latquot::quotient_basis(&weights, r).unwrap();
        // The construction reduces non-effective actions and may re-pick
        // the μ_{r'} generator at k = 1, so the verification conditions are
        // stated against the effective pair it reports.
        prop_assert!(latquot::verify_quotient_basis(
            &q.matrix,
            &q.effective_weights,
            q.effective_r,
        ));
        if !q.reduced && !q.generator_renormalized {
            prop_assert!(latquot::verify_quotient_basis(&q.matrix, &weights, r));
        }
    }

    #[test]
    fn unimodular_inverse_roundtrips(m in matrix_strategy()) {
        if m.rows() == m.cols() && m.is_unimodular() {
            let inv = m.inverse_unimodular().unwrap();
            prop_assert_eq!(m.mul(&inv), IntMatrix::identity(m.rows()));
        }
    }
}
