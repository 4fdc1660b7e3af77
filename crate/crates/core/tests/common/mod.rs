#![allow(dead_code)]

use lihull::semigroup::Semigroup;

pub fn s3() -> Semigroup {
    Semigroup::finite_table(
        vec![
            vec![0, 1, 2, 3, 4, 5],
            vec![1, 2, 0, 5, 3, 4],
            vec![2, 0, 1, 4, 5, 3],
            vec![3, 4, 5, 0, 1, 2],
            vec![4, 5, 3, 2, 0, 1],
            vec![5, 3, 4, 1, 2, 0],
        ],
        Some(0),
    )
    .unwrap()
}

/// One representative of every backend.
pub fn backends() -> Vec<Semigroup> {
    vec![
        Semigroup::free_monoid(2),
        Semigroup::naturals(),
        Semigroup::positive_cone(2),
        Semigroup::numerical(&[2, 3]).unwrap(),
        Semigroup::numerical(&[4, 6, 9]).unwrap(),
        Semigroup::ax_plus_b(),
        s3(),
    ]
}
