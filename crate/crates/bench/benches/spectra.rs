use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use squeezelab::oracle::{
    ft_kernel, quad_spectrum_via_ft, total_photon_numeric, Kernel, QuadratureScheme, Rule,
};
use squeezelab::{mandel_q, quad_spectrum, MandelTerms, Output, PulseState, QuadratureSelector};
use squeezelab_bench::{interference_point, linspace, splitter, spm_point, window};

fn closed_forms(c: &mut Criterion) {
    let point = spm_point();
    let bs = splitter();
    let omegas = linspace(0.0, 5.0, 256);
    c.bench_function("closed_form/quad_spectrum_x6x256", |b| {
        b.iter(|| {
            let mut acc = 0.0;
            for &omega in &omegas {
                for sel in QuadratureSelector::ALL {
                    acc += quad_spectrum(sel, black_box(omega), &point, Some(&bs))
                        .unwrap()
                        .value;
                }
            }
            acc
        })
    });
    let ip = interference_point();
    let win = window();
    c.bench_function("closed_form/mandel_q_x256", |b| {
        b.iter(|| {
            omegas
                .iter()
                .map(|&omega| {
                    mandel_q(
                        Output::One,
                        black_box(omega),
                        &ip,
                        &win,
                        &bs,
                        MandelTerms::Full,
                    )
                    .unwrap()
                    .q
                })
                .sum::<f64>()
        })
    });
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(20);
    for rule in [Rule::AdaptiveSimpson, Rule::GaussLegendreComposite] {
        let scheme = QuadratureScheme::new(50.0, 1e-9, rule).unwrap();
        for omega in [0.0, 5.0] {
            group.bench_with_input(
                BenchmarkId::new(format!("ft_kernel_g/{rule:?}"), omega),
                &omega,
                |b, &omega| b.iter(|| ft_kernel(Kernel::G, black_box(omega), &scheme).unwrap()),
            );
        }
    }
    let scheme = QuadratureScheme::default();
    let point = spm_point();
    let bs = splitter();
    group.bench_function("quad_spectrum_via_ft/S_Y1", |b| {
        let sel = QuadratureSelector::ALL[3];
        b.iter(|| {
            quad_spectrum_via_ft(sel, black_box(1.0), &point, 1.0, Some(&bs), &scheme).unwrap()
        })
    });
    let pulse = PulseState::default();
    group.bench_function("total_photon_numeric", |b| {
        b.iter(|| total_photon_numeric(black_box(6.0), 0.0, &bs, &pulse, &scheme).unwrap())
    });
    group.finish();
}

criterion_group!(benches, closed_forms, oracle);
criterion_main!(benches);
