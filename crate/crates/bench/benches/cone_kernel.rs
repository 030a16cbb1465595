use criterion::{criterion_group, criterion_main, Criterion};
use wallchamber::linalg::int_vec;
use wallchamber::Cone;

fn bench_double_description(c: &mut Criterion) {
    // cone over a 3-cube: 6 facets, 8 extreme rays in dimension 4
    let cube_facets: Vec<Vec<wallchamber::linalg::Int>> = vec![
        int_vec(&[1, 0, 0, 1]),
        int_vec(&[-1, 0, 0, 1]),
        int_vec(&[0, 1, 0, 1]),
        int_vec(&[0, -1, 0, 1]),
        int_vec(&[0, 0, 1, 1]),
        int_vec(&[0, 0, -1, 1]),
    ];
    c.bench_function("constraints->generators cube cone dim 4", |b| {
        b.iter(|| {
            let cone = Cone::from_int_constraints(4, &cube_facets, &[]).unwrap();
            cone.rays().len()
        })
    });

    let cone = Cone::from_int_constraints(4, &cube_facets, &[]).unwrap();
    c.bench_function("duality round trip cube cone", |b| {
        b.iter(|| cone.dual_cone().dual_cone().rays().len())
    });

    let other = Cone::from_int_generators(
        4,
        &[int_vec(&[1, 1, 1, 1]), int_vec(&[1, -1, 1, 2]), int_vec(&[0, 0, 1, 1])],
        &[],
    )
    .unwrap();
    c.bench_function("intersect cube cone with simplicial cone", |b| {
        b.iter(|| cone.intersect(&other).unwrap().rays().len())
    });
}

criterion_group!(benches, bench_double_description);
criterion_main!(benches);
