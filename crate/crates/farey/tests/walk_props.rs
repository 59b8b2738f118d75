mod common;

use common::{big, catalan, gcd, solution_words};
use farey::census::solutions;
use farey::cfrac::{convergents, expand_negative, expand_regular, CfKind};
use farey::dissect::{enumerate_triangulations, quiddity_of};
use farey::fareywalk::{
    classify_walk, enumerate_farey_polygons, farey_triangulate, index_by_determinant, index_of_polygon,
    quiddity_from_walk, t_rs, walk_from_word, walk_polygon, Periodicity, WalkClass, WalkSeq,
};
use farey::modmat::{classify_id, IdClass};
use farey::numcore::{normalize, SignedPair};
use farey::{Error, Int};
use num_traits::ToPrimitive;

fn pair(p: i64, q: i64) -> SignedPair<Int> {
    SignedPair::new(Int::from(p), Int::from(q)).unwrap()
}

fn as_i128(p: &SignedPair<Int>) -> (i128, i128) {
    (p.num().to_i128().unwrap(), p.den().to_i128().unwrap())
}

#[test]
fn census_solutions_match_the_oracle() {
    for n in 3..=9 {
        let ours: Vec<(Vec<i64>, i8)> = solutions::<i64>(n, 3 * n)
            .into_iter()
            .map(|(w, c)| (w, if c == IdClass::MinusId { -1 } else { 1 }))
            .collect();
        assert_eq!(ours, solution_words(n, 3 * n), "n={n}");
    }
}

#[test]
fn walks_have_unit_determinants_and_close_up() {
    for n in 3..=9 {
        for (c, sign) in solution_words(n, 3 * n - 6) {
            let w = walk_from_word(&big(&c)).unwrap();
            assert_eq!(w.len(), n);
            assert!(w.determinants().iter().all(|d| *d == Int::from(1)), "{c:?}");
            // Continue the recurrence past the window by hand.
            let (mut prev, mut cur) = ((0i128, -1i128), (1i128, 0i128));
            for &ci in &c {
                let next = (ci as i128 * cur.0 - prev.0, ci as i128 * cur.1 - prev.1);
                prev = cur;
                cur = next;
            }
            let p0 = as_i128(&w.point(0));
            assert_eq!(cur, (sign as i128 * p0.0, sign as i128 * p0.1), "{c:?}");
            assert_eq!(as_i128(&w.point(n as isize)), cur);
            let expected = if sign == -1 { Periodicity::Antiperiodic } else { Periodicity::Periodic };
            assert_eq!(w.periodicity, expected);
        }
    }
}

#[test]
fn walk_round_trip_on_the_census() {
    for n in 3..=9 {
        for (c, _) in solution_words(n, 3 * n - 6) {
            let w = walk_from_word(&big(&c)).unwrap();
            assert_eq!(quiddity_from_walk(&w).unwrap(), big(&c), "{c:?}");
            assert_eq!(index_by_determinant(&w), big(&c));
        }
    }
}

#[test]
fn totally_positive_walks_trace_their_triangulation() {
    for n in 3..=8 {
        for (c, sign) in solution_words(n, 3 * n - 6) {
            if c.iter().sum::<i64>() as usize != 3 * n - 6 {
                continue;
            }
            assert_eq!(sign, -1);
            let w = walk_from_word(&big(&c)).unwrap();
            assert_eq!(classify_walk(&w), WalkClass::FareyPolygon);
            let p = walk_polygon(&w).unwrap();
            let d = farey_triangulate(&p).unwrap();
            assert_eq!(quiddity_of::<i64>(&d), c);
            assert_eq!(index_of_polygon(&p).unwrap(), big(&c));
        }
    }
}

#[test]
fn farey_polygons_are_counted_by_catalan() {
    for n in 3..=8 {
        let polys = enumerate_farey_polygons::<Int>(n);
        assert_eq!(polys.len(), catalan(n - 2), "n={n}");
        let mut words: Vec<Vec<i64>> = polys
            .iter()
            .map(|p| {
                let w = index_of_polygon(p).unwrap();
                assert_eq!(classify_id(&w), IdClass::MinusId);
                w.iter().map(|x| x.to_i64().unwrap()).collect()
            })
            .collect();
        words.sort();
        let mut quids: Vec<Vec<i64>> = enumerate_triangulations(n).unwrap().iter().map(quiddity_of::<i64>).collect();
        quids.sort();
        assert_eq!(words, quids);
    }
}

#[test]
fn polygon_labels_are_convergents() {
    for r in 2..=70i64 {
        for s in 1..r {
            if gcd(r as i128, s as i128) != 1 {
                continue;
            }
            let x = normalize(Int::from(r), Int::from(s)).unwrap();
            let t = t_rs(&x).unwrap();
            let c = expand_negative(&x).unwrap();
            assert_eq!(t.k, c.len());
            assert_eq!(t.triangulation.labels[t.k], x);
            let conv: Vec<_> = convergents(&c, CfKind::Negative).iter().map(|p| p.reduce()).collect();
            assert_eq!(&t.triangulation.labels[1..=t.k], &conv[..], "{x}");
            assert!(t.triangulation.check());
            assert_eq!(t.a_data, expand_regular(&x).unwrap());
        }
    }
}

#[test]
fn walk_classes() {
    let mixed = WalkSeq::new(vec![pair(1, 0), pair(1, 1), pair(0, 1)], Periodicity::Periodic);
    assert_eq!(classify_walk(&mixed), WalkClass::Walk);
    let broken = WalkSeq::new(vec![pair(1, 0), pair(2, 1), pair(0, 1)], Periodicity::Periodic);
    assert_eq!(classify_walk(&broken), WalkClass::Invalid);
    assert!(matches!(quiddity_from_walk(&broken), Err(Error::NotPositive(_))));
    let heptagon = WalkSeq::new(
        vec![pair(1, 0), pair(1, 1), pair(0, 1), pair(-1, 1), pair(-1, 0), pair(-1, -1), pair(0, -1)],
        Periodicity::Periodic,
    );
    assert_eq!(classify_walk(&heptagon), WalkClass::PositiveWalk);
    assert_eq!(quiddity_from_walk(&heptagon).unwrap(), big(&[1, 1, 2, 1, 2, 1, 1]));
    assert_eq!(walk_from_word(&big(&[1, 2, 3])), Err(Error::NotASolution));
}
