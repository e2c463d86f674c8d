//! Fixed workloads shared by the benchmarks.

use hermite_wronskian::{segment, IndexSet};

/// Index sets of increasing Wronskian degree.
pub fn workload_sets() -> Vec<(&'static str, IndexSet)> {
    vec![
        ("F={1,2}", IndexSet::new(vec![1, 2]).unwrap()),
        ("F={2,3,7}", IndexSet::new(vec![2, 3, 7]).unwrap()),
        ("S(4,3)", segment(4, 3).unwrap()),
        ("S(6,4)", segment(6, 4).unwrap()),
        (
            "F={1,4,6,9,10}",
            IndexSet::new(vec![1, 4, 6, 9, 10]).unwrap(),
        ),
    ]
}

/// Segments for the recurrence and certificate benchmarks.
pub fn workload_segments() -> Vec<(usize, usize)> {
    vec![(2, 2), (4, 3), (6, 4), (8, 5)]
}
