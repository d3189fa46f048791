#![no_main]

use libfuzzer_sys::fuzz_target;

use gpm_color::{
    chi_of_pair, coloring_violations, list_color, optimal_coloring, random_lists,
    verify_list_coloring,
};

// Any instance the loader accepts must color cleanly: the solvers may never
// panic, and their verifiers may never flag the output.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(parsed) = gpm_color::format::parse_instance(text) else {
        return;
    };
    let pair = parsed.into_pair();
    if pair.n_elements() > 24 {
        return;
    }

    let coloring = optimal_coloring(&pair);
    assert!(
        coloring_violations(&pair, &coloring).is_empty(),
        "invalid optimal coloring"
    );
    assert_eq!(coloring.class_count(), chi_of_pair(&pair));

    let c = chi_of_pair(&pair);
    if c > 0 {
        let la = random_lists(pair.n_elements(), c, c + 2, 1);
        let out = list_color(&pair, &la).expect("list coloring must succeed at chi-sized lists");
        assert!(
            verify_list_coloring(&pair, &la, &out).is_empty(),
            "invalid list coloring"
        );
    }

    let (graph, _) = pair.to_bipartite();
    let (back, _) = graph
        .to_matroid_pair()
        .expect("round trip keeps degrees positive");
    assert_eq!(back.n_elements(), pair.n_elements());
});
