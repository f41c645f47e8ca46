use bperfect::greedy::default_order;
use bperfect::{b_greedy, clique, find_forbidden, Graph};

#[test]
fn readme_example() {
    let g = Graph::cycle(6).complement();
    assert!(find_forbidden(&g).is_none());

    let (coloring, _trace) = b_greedy(&g, &default_order(&g)).unwrap();
    assert_eq!(coloring.num_colors(), 3);

    let result = clique(&g).unwrap();
    assert_eq!(result.clique.len(), 3);
}
