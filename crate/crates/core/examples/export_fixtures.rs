//! Regenerates the checked-in fixture files from the library fixtures.
use pursuit_core::cover::write_torus_embedding;
use pursuit_core::fixtures;
use pursuit_core::graph::write_edge_list;

fn main() {
    let dir = std::path::Path::new("fixtures");
    std::fs::create_dir_all(dir).unwrap();
    let w = |name: &str, text: String| std::fs::write(dir.join(name), text).unwrap();
    w("petersen.tor", write_torus_embedding(&fixtures::petersen_torus()));
    w("c4ring.tor", write_torus_embedding(&fixtures::c4_ring()));
    w("c4c4.tor", write_torus_embedding(&fixtures::torus_grid(4)));
    w("c5c5.tor", write_torus_embedding(&fixtures::torus_grid(5)));
    w("dodecahedron.txt", write_edge_list(&fixtures::dodecahedron().0));
    w("petersen.txt", write_edge_list(&fixtures::petersen()));
    let (g, pos) = fixtures::dodecahedron();
    w("onetile.tor", write_torus_embedding(&fixtures::one_tile_planar(&g, &pos)));
    // invalid on purpose: vertices 0 and 1 at the same point
    w(
        "bad.tor",
        "3 3\n0 0.2 0.2\n1 0.2 0.2\n2 0.8 0.8\n0 1 0 0\n1 2 0 0\n0 2 0 0\n".into(),
    );
}
