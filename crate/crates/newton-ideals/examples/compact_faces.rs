//! The compact face lattice of a Newton polyhedron, with the integer
//! hyperplane certificate that exposes each face.

use newton_ideals::{MonomialIdeal, NewtonPolyhedron};

fn main() {
    // the monomial curve generators xy, yz, xz: one triangle, three
    // edges, three vertices
    let ideal = MonomialIdeal::parse_text("x y, y z, x z", None).unwrap();
    let p = NewtonPolyhedron::of(&ideal).unwrap();

    println!("ideal: {}", ideal);
    for face in p.compact_faces().unwrap() {
        let verts: Vec<_> = face.vertices.iter().map(|v| v.entries().to_vec()).collect();
        println!(
            "dim {} face {:?}, certificate normal {:?} offset {}",
            face.dim, verts, face.certificate.normal, face.certificate.offset
        );
        // every certificate is strictly positive and touches the
        // polyhedron exactly along its face
        assert!(face.certificate.is_strictly_positive());
        assert!(p.is_supporting(&face.certificate).unwrap());
    }

    let maximal = p.maximal_compact_faces().unwrap();
    println!(
        "maximal faces: {} (top dimension {})",
        maximal.len(),
        p.max_compact_face_dim().unwrap()
    );

    // faces scale along with powers of the ideal
    let square = ideal.power(2);
    let scaled = p
        .compact_faces()
        .unwrap()
        .iter()
        .map(|f| f.scale(2).unwrap().vertex_set())
        .collect::<Vec<_>>();
    let direct = NewtonPolyhedron::of(&square)
        .unwrap()
        .compact_faces()
        .unwrap()
        .iter()
        .map(|f| f.vertex_set())
        .collect::<Vec<_>>();
    println!("faces of the square match the scaled faces: {}", scaled == direct);
}
