use diagram::{linking_matrix, parse, signature, LinkData};

fn lk(text: &str) -> LinkData {
    linking_matrix(&parse(text).unwrap())
}

#[test]
fn framings_and_linking_numbers() {
    assert_eq!(lk("cup> / x+ / cap<").matrix(), &[vec![1]]);
    assert_eq!(lk("cup> / x- / cap<").matrix(), &[vec![-1]]);
    assert_eq!(lk("cup> cup> / | x+ | / | x+ | / | | x+ / cap> cap<").matrix(), &[vec![0, 1], vec![1, 1]]);
    assert_eq!(lk("cup> cup> / | x- | / | x- | / cap> cap>").matrix(), &[vec![0, -1], vec![-1, 0]]);
}

#[test]
fn signatures() {
    assert_eq!(signature(&parse("cup> / x+ / cap<").unwrap()), 1);
    assert_eq!(signature(&parse("cup> / x- / cap<").unwrap()), -1);
    assert_eq!(signature(&parse("cup> cup> / | x+ | / | x+ | / cap> cap>").unwrap()), 0);
    assert_eq!(LinkData::from_matrix(vec![vec![2, 1], vec![1, 2]]).signature(), 2);
    assert_eq!(LinkData::from_matrix(vec![vec![0, 0], vec![0, 0]]).inertia(), (0, 0));
    assert_eq!(LinkData::from_matrix(vec![]).signature(), 0);
}

#[test]
fn characteristic_and_even_sublinks() {
    let zero = lk("cup> / cap>");
    assert_eq!(zero.characteristic_sublinks(), vec![vec![0], vec![1]]);
    assert_eq!(zero.even_sublinks(), vec![vec![0], vec![1]]);
    let plus = lk("cup> / x+ / cap<");
    assert_eq!(plus.characteristic_sublinks(), vec![vec![1]]);
    assert_eq!(plus.even_sublinks(), vec![vec![0]]);
    let hopf01 = lk("cup> cup> / | x+ | / | x+ | / | | x+ / cap> cap<");
    assert_eq!(hopf01.characteristic_sublinks(), vec![vec![1, 0]]);
    let empty = LinkData::from_matrix(vec![]);
    assert_eq!(empty.characteristic_sublinks(), vec![Vec::<u32>::new()]);
}

#[test]
fn euler_characteristic_counts_handles() {
    let d = parse("cup> / dot(2) / cap>\ncup> / x+ / cap<").unwrap();
    assert_eq!((d.dotted_count(), d.component_count()), (1, 2));
    assert_eq!(d.euler_characteristic(), 2);
}

#[test]
fn crossing_sites_know_which_strand_is_over() {
    let d = parse("cup> cup> / | x+ | / | x+ | / cap> cap>").unwrap();
    let sites = d.crossings();
    assert_eq!(sites.len(), 2);
    assert!(!sites[0].left.up && sites[0].right.up);
    assert!(!sites[0].left_over());
    assert_eq!(d.crossing_count(), 2);
}
