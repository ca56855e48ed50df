window.search = Object.assign(window.search, JSON.parse('{"doc_urls":["introduction.html#what-isoplex-does","introduction.html#a-complete-run-in-a-dozen-lines","introduction.html#the-pipeline","polynomials.html#polynomials-and-systems","polynomials.html#homogeneity-is-enforced","polynomials.html#zero-terms-widen-the-ambient-space","polynomials.html#exact-and-float-views","polynomials.html#random-dense-polynomials","decomposition.html#the-spherical-fan","decomposition.html#the-initial-fan","decomposition.html#refinement","decomposition.html#validation","decomposition.html#why-cones-and-not-a-mesh","criterion.html#face-tests","criterion.html#where-the-system-and-its-interpolant-can-disagree","criterion.html#bernstein-coefficients","criterion.html#separating-directions","criterion.html#floats-propose-integers-dispose","certificates.html#certificates-and-exact-replay","certificates.html#the-file-format","certificates.html#round-trip","certificates.html#what-the-checker-recomputes","certificates.html#failure-modes","certificates.html#the-solver-holds-itself-to-the-same-standard","topology.html#from-model-to-topology","topology.html#exact-cell-extraction","topology.html#components-and-z2-betti-numbers","topology.html#geometry-export","topology.html#what-is-certified-here-and-what-is-not","cli.html#command-line","cli.html#solve--certify-a-model","cli.html#verify--replay-a-certificate","cli.html#topo--components-and-betti-numbers","cli.html#bench--random-dense-systems","cli.html#json-output"],"index":{"documentStore":{"docInfo":{"0":{"body":111,"breadcrumbs":2,"title":1},"1":{"body":64,"breadcrumbs":5,"title":4},"10":{"body":114,"breadcrumbs":3,"title":1},"11":{"body":43,"breadcrumbs":3,"title":1},"12":{"body":45,"breadcrumbs":4,"title":2},"13":{"body":35,"breadcrumbs":4,"title":2},"14":{"body":138,"breadcrumbs":5,"title":3},"15":{"body":150,"breadcrumbs":4,"title":2},"16":{"body":82,"breadcrumbs":4,"title":2},"17":{"body":59,"breadcrumbs":6,"title":4},"18":{"body":33,"breadcrumbs":6,"title":3},"19":{"body":152,"breadcrumbs":5,"title":2},"2":{"body":116,"breadcrumbs":2,"title":1},"20":{"body":51,"breadcrumbs":5,"title":2},"21":{"body":82,"breadcrumbs":5,"title":2},"22":{"body":99,"breadcrumbs":5,"title":2},"23":{"body":49,"breadcrumbs":8,"title":5},"24":{"body":27,"breadcrumbs":4,"title":2},"25":{"body":94,"breadcrumbs":5,"title":3},"26":{"body":136,"breadcrumbs":6,"title":4},"27":{"body":68,"breadcrumbs":4,"title":2},"28":{"body":30,"breadcrumbs":4,"title":2},"29":{"body":55,"breadcrumbs":4,"title":2},"3":{"body":114,"breadcrumbs":4,"title":2},"30":{"body":156,"breadcrumbs":5,"title":3},"31":{"body":70,"breadcrumbs":5,"title":3},"32":{"body":71,"breadcrumbs":6,"title":4},"33":{"body":80,"breadcrumbs":6,"title":4},"34":{"body":29,"breadcrumbs":4,"title":2},"4":{"body":24,"breadcrumbs":4,"title":2},"5":{"body":42,"breadcrumbs":7,"title":5},"6":{"body":32,"breadcrumbs":5,"title":3},"7":{"body":60,"breadcrumbs":5,"title":3},"8":{"body":46,"breadcrumbs":4,"title":2},"9":{"body":88,"breadcrumbs":4,"title":2}},"docs":{"0":{"body":"isoplex takes a system of homogeneous polynomials with rational\\ncoefficients and produces a piecewise-linear model of its real\\nprojective zero set, together with a machine-checkable certificate\\nthat the model is faithful. The model lives on the unit sphere, is\\nsymmetric under the antipodal map x ↦ -x, and descends to projective\\nspace by identifying antipodes. Three properties distinguish it from a plotting tool: The output is certified. A separate checker replays the\\ncertificate in exact integer arithmetic. Floating point is used only\\nto search for the certificate, never to justify it. The model is topologically faithful. For a single equation the\\ncertificate implies an ambient isotopy between the model and the\\nvariety — same number of components, same nesting, same Betti\\nnumbers. For systems of several equations the same convex-position\\ncondition is verified for every sign combination of the equations;\\nthe isotopy conclusion in that case is conjectural, and every report\\nsays so (see guarantee_statement). The topology is computed exactly. Components and Z/2 Betti\\nnumbers of the model are derived from an exact cell complex with\\nrational vertices, not from a sampled mesh.","breadcrumbs":"What isoplex does » What isoplex does","id":"0","title":"What isoplex does"},"1":{"body":"#![allow(unused)] fn main() {\\nuse isoplex::{analyze, build_complex, parse_system, solve, SolveParams, SolveStatus}; // one quartic with four ovals\\nlet sys = parse_system( \\"x0^4 + 2 x0^2 x1^2 + x1^4 - 2 x0^2 x2^2 - 2 x1^2 x2^2 + x2^4 \\\\ + 1/2 x0^3 x1 - 1/2 x0 x1^3\\\\n\\",\\n).unwrap(); let res = solve(&sys, &SolveParams::default());\\nassert!(matches!(res.status, SolveStatus::Certified)); // the certificate survives exact replay\\nlet text = isoplex::format_certificate(&sys, &res);\\nlet cert = isoplex::parse_certificate(&text).unwrap();\\nisoplex::check_certificate(&sys, &cert, 0).unwrap(); // four projective circles\\nlet report = analyze(&build_complex(&res.decomp, res.tilde.exact_rows()));\\nassert_eq!(report.components, 4);\\nassert!(report.component_betti.iter().all(|b| b == &vec![1, 1])); }","breadcrumbs":"What isoplex does » A complete run in a dozen lines","id":"1","title":"A complete run in a dozen lines"},"10":{"body":"refine(a, b) splits the edge between rays a and b: a new ray is\\ninserted near the spherical midpoint of the two endpoints, every cone\\ncontaining the edge is cut in two, and the antipodal edge gets the\\nmirror treatment so the symmetry is preserved. The new ray is again an\\ninteger vector — a weighted combination of the endpoints balanced by\\ntheir norms, with common factors stripped. #![allow(unused)] fn main() {\\nuse isoplex::Decomposition; let mut d = Decomposition::initial(3);\\n// vertex 2i is +e_i and vertex 2i+1 is -e_i, so {0, 2} is the edge\\n// between e0 and e1\\nlet delta = d.refine(0, 2); // one new ray and its antipode\\nassert_eq!(d.num_vertices(), 8);\\n// the two cones on each side of each split edge are replaced by four\\nassert_eq!(d.num_cones(), 12); // the delta lists every face whose star changed, so a solver can\\n// retest exactly the invalidated work\\nassert!(!delta.dirty_faces(&d).is_empty()); } Cone ids are stable: splitting retires the old cone id and allocates\\nnew ones, so cone_ids() enumerates live cones only. This is what lets\\nthe search keep per-cone caches across refinements.","breadcrumbs":"The spherical fan » Refinement","id":"10","title":"Refinement"},"11":{"body":"The structural invariants — positive spanning, disjoint interiors,\\nantipodal closure — are enforced by construction, and validate additionally spot-checks them numerically with random\\ndirections; it is used in tests and after parsing a certificate: #![allow(unused)] fn main() {\\nuse isoplex::Decomposition;\\nuse rand::SeedableRng;\\nuse rand_chacha::ChaCha8Rng; let mut d = Decomposition::initial(4);\\nd.refine(0, 2);\\nd.refine(4, 6);\\nlet mut rng = ChaCha8Rng::seed_from_u64(0);\\nd.validate(&mut rng, 200).unwrap(); }","breadcrumbs":"The spherical fan » Validation","id":"11","title":"Validation"},"12":{"body":"The fan structure earns its keep twice. First, each cone carries a chart: composing an equation with the cone’s ray matrix produces a\\npolynomial on the standard simplex, where Bernstein-coefficient tests\\napply ( Face tests). Second, a face shared by several\\ncones is tested once, with the gradient information of all its\\ncofaces pooled — the key step that makes the certificate a statement\\nabout the whole sphere and not about isolated patches.","breadcrumbs":"The spherical fan » Why cones and not a mesh","id":"12","title":"Why cones and not a mesh"},"13":{"body":"The model produced by the solver is the zero set of the piecewise\\nlinear interpolant: on each cone, the unique linear function agreeing\\nwith the system at the cone’s rays. The certificate has to rule out\\nevery way the interpolant could misrepresent the system. The faces of\\nthe fan are tested one at a time, and a face passes if one of two\\nconditions holds on it.","breadcrumbs":"Face tests » Face tests","id":"13","title":"Face tests"},"14":{"body":"Write p for an equation and p̃ for its interpolant. On the region\\nwhere p · p̃ > 0 both have the same strict sign, so they cut the face\\nidentically (not at all, or along matching slabs). All risk is\\nconcentrated where p · p̃ ≤ 0. The two passing conditions are: Sign condition — on the whole face, every equation satisfies p · p̃ > 0, each factor holding one strict sign. The risky region\\nis empty and the face carries no part of the model boundary dispute. Convex position — there is a direction with strictly positive\\ninner product against all relevant gradients on the face: the\\ngradients of each equation, and the gradients of the interpolant on\\nevery cone containing the face. If those vectors avoid the origin’s\\nconvex hull uniformly, the zero sets of p and p̃ are graphs over\\nthe same transversal direction and cross the face the same way. For m equations this is checked for every sign combination\\n( sign_orbits(m) enumerates the canonical half), because the\\nargument must survive negating any subset of equations. Neither condition holds everywhere on an early coarse fan, so the face\\nis subdivided: a binary split tree over the face’s parameter\\nsimplex, where each leaf must satisfy one of the two conditions. If a\\nleaf resists at the depth budget, the face test fails and the solver\\nrefines the fan instead ( The spherical fan).","breadcrumbs":"Face tests » Where the system and its interpolant can disagree","id":"14","title":"Where the system and its interpolant can disagree"},"15":{"body":"Both conditions are decided through Bernstein coefficients.\\nComposing an equation with the ray matrix of a face yields a\\npolynomial on the standard simplex; its Bernstein coefficients bound\\nthe polynomial’s range, and positivity of all coefficients proves\\npositivity of the function: #![allow(unused)] fn main() {\\nuse isoplex::bernstein::BernsteinForm;\\nuse isoplex::parse_system; let sys = parse_system(\\"x0^2 + x1^2 - x2^2\\\\n\\").unwrap();\\nlet p = &sys.polys()[0]; // on the standard simplex the chart is the identity, so the form\\n// evaluates the polynomial itself (in barycentric coordinates)\\nlet b = BernsteinForm::from_terms(p.float_terms(), 3, 2);\\nlet lam = [0.2, 0.3, 0.5];\\nassert!((b.value_scalar_at(&lam).unwrap() - p.eval_f64(&lam)).abs() < 1e-12); } Subdivision replaces a form by two forms on the halves of an edge of\\nthe parameter simplex, by repeated midpoint averaging of coefficient\\nslices. The halves agree exactly with the parent under the\\nreparametrization — subdividing is substitution, which is why a\\nsplit tree proves something about the original face: #![allow(unused)] fn main() {\\nuse isoplex::bernstein::BernsteinForm;\\nuse isoplex::parse_system; let sys = parse_system(\\"x0^2 + x1^2 - x2^2\\\\n\\").unwrap();\\nlet b = BernsteinForm::from_terms(sys.polys()[0].float_terms(), 3, 2); let (left, _right) = b.subdivide_edge(0, 1);\\n// the left half keeps vertex 0; its point (u0, u1, u2) sits at\\n// (u0 + u1/2, u1/2, u2) in the parent simplex\\nlet u = [0.5, 0.25, 0.25];\\nlet parent = [0.5 + 0.125, 0.125, 0.25];\\nlet a = left.value_scalar_at(&u).unwrap();\\nlet e = b.value_scalar_at(&parent).unwrap();\\nassert!((a - e).abs() < 1e-12); } The coefficients sharpen quadratically under subdivision, so a face on\\nwhich a condition holds at all is settled after few splits.","breadcrumbs":"Face tests » Bernstein coefficients","id":"15","title":"Bernstein coefficients"},"16":{"body":"The convex-position condition reduces to a question about finitely\\nmany vectors: does the convex hull of these gradients avoid the\\norigin? A min-norm-point search answers it and produces the witness\\ndirection: #![allow(unused)] fn main() {\\nuse isoplex::minnorm::{separate, SeparationResult};\\nuse isoplex::Guards; let tol = Guards::default().min_norm; // all in the x > 0 half-space: separated, with an explicit normal\\nlet pts = vec![vec![2.0, 1.0], vec![1.0, -1.0], vec![3.0, 0.0]];\\nmatch separate(&pts, tol) { SeparationResult::Separated { normal, margin } => { assert!(margin > 0.0); for p in &pts { let dot: f64 = p.iter().zip(&normal).map(|(a, b)| a * b).sum(); assert!(dot > 0.0); } } other => panic!(\\"expected separation, got {other:?}\\"),\\n} // a triangle around the origin: inside, with barycentric evidence\\nlet tri = vec![vec![1.0, 0.0], vec![-1.0, 1.0], vec![-1.0, -1.0]];\\nassert!(matches!(separate(&tri, tol), SeparationResult::Inside { .. })); }","breadcrumbs":"Face tests » Separating directions","id":"16","title":"Separating directions"},"17":{"body":"Everything in this chapter runs in floating point, guarded by the\\nmargins in Guards: a sign decision must clear a relative margin, a\\nseparating direction a geometric one. Margins make float verdicts likely to survive exact scrutiny — but not certainly, since deep\\nsubdivision can erode all significant digits. The solver therefore\\nreplays each face certificate in exact integer arithmetic before\\nrecording it ( Certificates and exact replay); a\\nfloat verdict that fails the replay is treated as a failed face, which\\nonly costs extra refinement. False positives are structurally\\nimpossible, not just unlikely.","breadcrumbs":"Face tests » Floats propose, integers dispose","id":"17","title":"Floats propose, integers dispose"},"18":{"body":"A certificate is a plain text file that makes the solver’s work\\nauditable: it records the fan, the interpolant, and per-face decision\\ntrees, in exactly the detail a checker needs to re-derive every claim\\nwith integer arithmetic. Nothing in the checker trusts the solver —\\nnot its floats, not its conventions, not even its certificate writer.","breadcrumbs":"Certificates and exact replay » Certificates and exact replay","id":"18","title":"Certificates and exact replay"},"19":{"body":"[header]\\nnvars 3\\nm 1\\ndegrees 2\\n[vertices]\\nv 0 1 0 0\\nv 1 -1 0 0\\n...\\n[cones]\\nc 0 0 2 4\\nc 1 2 3 4\\n...\\n[tilde]\\nt 0 1\\nt 1 1\\n...\\n[face 0 2]\\n(split 0-1 (sign 0 +) (sep (+ 1/2 -3/4 1))) [header] fixes the ambient dimension, the number of equations, and\\ntheir degrees; the checker confirms all three against the input\\nsystem before anything else. [vertices] lists the integer rays of the fan, one v id coords…\\nline each. [cones] lists each cone as its vertex ids. [tilde] gives the value of every equation at every ray, as exact\\nrationals — the data defining the interpolant. The checker\\nrecomputes each value from the input system and rejects mismatches. Each [face ids…] section holds one S-expression: the decision tree\\nfor that face. (split i-j L R) subdivides the face chart along the\\nedge between local columns i and j (left keeps column i); (sign p s) claims equation p and its interpolant both hold the\\nstrict sign s on the subcell; (sep (σ dir…)…) claims, for each\\ncanonical sign pattern σ, that the direction has strictly positive\\ninner product with every pooled gradient.","breadcrumbs":"Certificates and exact replay » The file format","id":"19","title":"The file format"},"2":{"body":"Search ( solve). Start from the fan of coordinate orthants on\\nthe sphere. Interpolate the system linearly at the rays of the fan;\\nthe interpolant’s zero set is the candidate model. Test every face\\nof the fan: either the equations provably avoid zero there, or a\\nconvex-position condition on gradients guarantees the zero sets of\\nthe system and of its interpolant cross the face the same way.\\nFaces that resist are subdivided; if subdivision alone is not\\nenough, the fan is refined and only the invalidated faces are\\nretested. The chapters The spherical fan and Face tests cover the two halves of this loop. Certification ( check_certificate). The search writes a text\\ncertificate: the fan, the interpolant values, and one decision tree\\nper face whose leaves carry sign claims and separating directions.\\nThe checker re-derives every claim with integer arithmetic — see Certificates and exact replay. Topology ( analyze). The interpolant’s zero set is cut out of\\neach cone exactly, glued, folded through the antipodal quotient, and\\nsummarized — see From model to topology. Every stage is available as a library call and as a subcommand of the isoplex binary ( Command line).","breadcrumbs":"What isoplex does » The pipeline","id":"2","title":"The pipeline"},"20":{"body":"#![allow(unused)] fn main() {\\nuse isoplex::{ check_certificate, format_certificate, parse_certificate, parse_system, solve, SolveParams,\\n}; let sys = parse_system(\\"x0^2 + x1^2 - x2^2\\\\n\\").unwrap();\\nlet res = solve(&sys, &SolveParams::default()); let text = format_certificate(&sys, &res);\\nassert!(text.starts_with(\\"[header]\\")); let cert = parse_certificate(&text).unwrap();\\nlet report = check_certificate(&sys, &cert, 0).unwrap();\\nassert!(report.faces > 0 && report.leaves >= report.faces); } The third argument of check_certificate seeds the randomized fan\\nspot-check (random directions must land in exactly one cone); all\\narithmetic in the replay itself is deterministic and exact.","breadcrumbs":"Certificates and exact replay » Round trip","id":"20","title":"Round trip"},"21":{"body":"For every face section, the checker composes the input equations with\\nthe face’s integer ray columns, converts to integer Bernstein\\ncoefficients (clearing denominators row by row), and walks the tree.\\nSplits are replayed with an averaging scheme that never divides, so\\ncoefficients stay integers at any depth. At a sign leaf it checks\\nevery coefficient’s sign, for the equation and its interpolant. At a sep leaf it checks the witness list covers precisely the canonical\\nsign patterns and that each stated direction has positive inner\\nproduct against every gradient generator — with big-integer dot\\nproducts, where a float could silently lose the sign. Because any strictly positive rescaling of a generator preserves both\\nconditions, the checker is free to use unnormalized integer vectors\\nthroughout: there is no rounding anywhere an inequality is decided.","breadcrumbs":"Certificates and exact replay » What the checker recomputes","id":"21","title":"What the checker recomputes"},"22":{"body":"A certificate can fail in two distinct ways, and they are kept apart\\ndeliberately: Malformed — the text is not a certificate: syntax errors, ids\\nout of range, missing sections, wrong counts. Reported with a line\\nnumber. Rejected — the text parses but some claim fails exact replay.\\nReported with the face, the path into its tree (a string of L/ R\\nchoices), and the reason. #![allow(unused)] fn main() {\\nuse isoplex::{ check_certificate, format_certificate, parse_certificate, parse_system, solve, CertError, SolveParams,\\n}; let sys = parse_system(\\"x0^2 + x1^2 - x2^2\\\\n\\").unwrap();\\nlet res = solve(&sys, &SolveParams::default());\\nlet text = format_certificate(&sys, &res); // not a certificate at all\\nassert!(matches!( parse_certificate(\\"once upon a time\\"), Err(CertError::Malformed { .. })\\n)); // a certificate with one sign claim flipped: parses, then rejected\\nlet tampered = if text.contains(\\"+)\\") { text.replacen(\\"+)\\", \\"-)\\", 1)\\n} else { text.replacen(\\"-)\\", \\"+)\\", 1)\\n};\\nlet cert = parse_certificate(&tampered).unwrap();\\nmatch check_certificate(&sys, &cert, 0) { Err(CertError::Rejected { face, path, reason }) => { assert!(!face.is_empty()); let _ = (path, reason); // pinpoints the failing leaf } other => panic!(\\"tampering must be caught, got {other:?}\\"),\\n} }","breadcrumbs":"Certificates and exact replay » Failure modes","id":"22","title":"Failure modes"},"23":{"body":"Float margins make the search’s verdicts likely to replay — not\\ncertain. Deep subdivision of charts with large integer rays can erode\\nevery significant digit of a float coefficient, at which point a float\\nmargin means nothing. So the solver runs this exact replay on each\\nface certificate before recording it; a face that fails is simply\\nrefined further. An emitted certificate therefore replays by\\nconstruction, and the standalone checker remains what it should be: an\\nindependent audit, not a hopeful one.","breadcrumbs":"Certificates and exact replay » The solver holds itself to the same standard","id":"23","title":"The solver holds itself to the same standard"},"24":{"body":"Once a certificate exists, the model itself — the zero set of the\\ninterpolant — is an explicit object: inside each cone it is the\\nsolution of m linear equations, cut against the cone’s simplex\\nchart. build_complex extracts it exactly and analyze summarizes\\nit.","breadcrumbs":"From model to topology » From model to topology","id":"24","title":"From model to topology"},"25":{"body":"On a cone’s chart simplex the interpolant is linear, so its zero set\\nis a convex polytope: the simplex sliced by m hyperplanes. Its\\nvertices have rational coordinates (they come from solving linear\\nsystems over the rationals), so two cones agree bit-for-bit on their\\nshared face and gluing needs no tolerances. The result is a cell\\ncomplex on the sphere, carried along with the antipodal identification\\nof its cells. #![allow(unused)] fn main() {\\nuse isoplex::{analyze, build_complex, parse_system, solve, SolveParams, SolveStatus}; let sys = parse_system(\\"x0^2 + x1^2 - x2^2\\\\n\\").unwrap();\\nlet res = solve(&sys, &SolveParams::default());\\nassert!(matches!(res.status, SolveStatus::Certified)); let cx = build_complex(&res.decomp, res.tilde.exact_rows());\\nlet report = analyze(&cx); // on the sphere: two antipodal circles\\nassert_eq!(report.sphere_components, 2);\\n// in the projective plane: one circle\\nassert_eq!(report.components, 1);\\nassert_eq!(report.betti, vec![1, 1]);\\nassert_eq!(report.euler, 0);\\n// the quotient has exactly half the cells of the sphere cover\\nfor (q, s) in report.cells.iter().zip(&report.sphere_cells) { assert_eq!(2 * q, *s);\\n} }","breadcrumbs":"From model to topology » Exact cell extraction","id":"25","title":"Exact cell extraction"},"26":{"body":"analyze folds the sphere complex through the antipodal map and\\ncomputes, over the field with two elements: connected components of the quotient (union-find over cells), Betti numbers, global and per component, by ranks of the\\nboundary matrices over Z/2, the Euler characteristic, cross-checked against the alternating\\nBetti sum — an internal consistency test that runs on every call. Z/2 coefficients are the natural choice here: the model may contain\\nnon-orientable pieces (it lives in projective space), and Z/2 homology\\nis insensitive to orientation while still separating, say, a sphere\\nfrom a torus. #![allow(unused)] fn main() {\\nuse isoplex::{analyze, build_complex, parse_system, solve, SolveParams}; // a projective quadric surface: topologically a 2-sphere\\nlet sys = parse_system(\\"x0^2 + x1^2 + x2^2 - x3^2\\\\n\\").unwrap();\\nlet res = solve(&sys, &SolveParams::default());\\nlet report = analyze(&build_complex(&res.decomp, res.tilde.exact_rows())); assert_eq!(report.components, 1);\\nassert_eq!(report.betti, vec![1, 0, 1]);\\nassert_eq!(report.euler, 2); } An empty variety is reported as such, with no cells anywhere: #![allow(unused)] fn main() {\\nuse isoplex::{analyze, build_complex, parse_system, solve, SolveParams, SolveStatus}; // positive definite: no real projective zeros\\nlet sys = parse_system(\\"x0^2 + x1^2 + x2^2\\\\n\\").unwrap();\\nlet res = solve(&sys, &SolveParams::default());\\nassert!(matches!(res.status, SolveStatus::Certified)); let report = analyze(&build_complex(&res.decomp, res.tilde.exact_rows()));\\nassert_eq!(report.components, 0);\\nassert!(report.cells.is_empty() || report.cells.iter().all(|&n| n == 0)); }","breadcrumbs":"From model to topology » Components and Z/2 Betti numbers","id":"26","title":"Components and Z/2 Betti numbers"},"27":{"body":"export_off writes the spherical model (both antipodal copies, so the\\nfile is directly renderable) as an OFF file — nOFF with an explicit\\ndimension line outside three variables — with vertices radially\\nprojected to the unit sphere. OFF files carry polygons; when the model\\nhas one-dimensional cells, they are returned as a companion edge list,\\nwhich the command line writes to an .edges sidecar file. #![allow(unused)] fn main() {\\nuse isoplex::{build_complex, export_off, parse_system, solve, SolveParams}; let sys = parse_system(\\"x0^2 + x1^2 - x2^2\\\\n\\").unwrap();\\nlet res = solve(&sys, &SolveParams::default());\\nlet cx = build_complex(&res.decomp, res.tilde.exact_rows()); let (off, edges) = export_off(&cx);\\nassert!(off.starts_with(\\"OFF\\\\n\\"));\\nassert!(edges.is_some()); // a curve: cells live in the edge list }","breadcrumbs":"From model to topology » Geometry export","id":"27","title":"Geometry export"},"28":{"body":"The cell extraction and the homology computation are exact, so the\\nreport is a true statement about the model. That the model reflects\\nthe variety is exactly what the certificate establishes — unconditional\\nfor one equation, and for systems conditional on the convex-position\\ntest as described in guarantee_statement. Reports for systems carry\\nthat caveat verbatim.","breadcrumbs":"From model to topology » What is certified here, and what is not","id":"28","title":"What is certified here, and what is not"},"29":{"body":"The isoplex binary exposes the pipeline as four subcommands. All of\\nthem read the system format of Polynomials and systems\\nand exit with a meaningful code: code meaning 0 success 1 malformed input: system file, certificate file, or I/O 2 the solve budget was exhausted before certification 3 a certificate was rejected by the exact replay Every subcommand accepts --format json for machine-readable output\\n(one JSON object per line). Set ISOPLEX_LOG=debug to watch\\nrefinement progress on stderr.","breadcrumbs":"Command line » Command line","id":"29","title":"Command line"},"3":{"body":"The input is a text block with one homogeneous polynomial per line.\\nA polynomial is a signed sum of terms; a term is an optional rational\\nconstant followed by variable powers: x0^4 + 2 x0^2 x1^2 + x1^4 - 2 x0^2 x2^2 - 2 x1^2 x2^2 + x2^4\\n3/4 x0^2 - x1 x2 The grammar in full: Variables are x0, x1, x2, …; the ambient dimension is one plus\\nthe largest index that appears on any line. Exponents use ^: x0^3. A bare variable means exponent one. Coefficients are integers or fractions: 2, -5, 3/4, 159201/160000. A missing coefficient means 1. Whitespace separates the factors of a term; a * between factors is\\nallowed and means the same thing. # starts a comment running to the end of the line; blank lines are\\nskipped. #![allow(unused)] fn main() {\\nuse isoplex::parse_system; let text = \\"x0^2 + x1^2 - x2^2 # homogenized unit circle\\\\n3/4 x0 x1 - x2^2\\\\n\\";\\nlet sys = parse_system(text).unwrap();\\nassert_eq!(sys.m(), 2); // two equations\\nassert_eq!(sys.nvars(), 3); // three variables\\nassert_eq!(sys.degrees(), vec![2, 2]); }","breadcrumbs":"Polynomials and systems » Polynomials and systems","id":"3","title":"Polynomials and systems"},"30":{"body":"$ isoplex solve conic.sys --out conic.cert\\nsystem: 1 equation in 3 variables, degree 2\\nstatus: certified\\nrefinements: 0 cones: 8 faces: 26 face tests: 26\\nmax split depth: 0 leaves: 26\\nsolve wall: 0.9 ms\\nverify: 26 faces, 26 leaves replayed exactly in 1.9 ms\\ncertificate: conic.cert\\nguarantee: the model is ambient-isotopic to the projective zero set The conic certifies on the initial octahedron fan without any\\nrefinement. A harder input shows the loop at work — a quartic with\\nfour ovals, two of them separated by a thin gap: $ isoplex solve quartic.sys\\nsystem: 1 equation in 3 variables, degree 4\\nstatus: certified\\nrefinements: 181 cones: 732 faces: 2198 face tests: 3721\\nmax split depth: 2 leaves: 2286\\nsolve wall: 2386.0 ms\\nverify: 2198 faces, 2286 leaves replayed exactly in 1644.3 ms\\nguarantee: the model is ambient-isotopic to the projective zero set By default the fresh certificate is immediately replayed in exact\\narithmetic (the verify: line); --no-verify skips that. Knobs: --max-splits (split-tree depth per face), --max-refinements (fan\\nrefinement budget; exhausting it exits 2), --threads (worker count —\\nresults are bit-identical for any value), --seed (for the randomized\\nfan spot-check).","breadcrumbs":"Command line » solve — certify a model","id":"30","title":"solve — certify a model"},"31":{"body":"$ isoplex verify conic.sys conic.cert\\nsystem: 1 equation in 3 variables, degree 2\\nverify: 26 faces, 26 leaves replayed exactly in 2.5 ms\\nguarantee: the model is ambient-isotopic to the projective zero set Verification is independent of the solver and usually cheaper than the\\nsearch that produced the certificate. A malformed file exits 1 with a\\nline number; a well-formed file with a false claim exits 3 and names\\nthe face, the path into its decision tree, and the failing reason: $ isoplex verify conic.sys tampered.cert\\nerror: rejected at face [0] (path ``): equation 0 claimed strictly -\\nbut coefficients are uniformly +","breadcrumbs":"Command line » verify — replay a certificate","id":"31","title":"verify — replay a certificate"},"32":{"body":"$ isoplex topo conic.sys --cert conic.cert --off conic.off\\nsystem: 1 equation in 3 variables, degree 2\\ncells (quotient): 4 vertices, 4 edges\\ncomponents: 1 component 1: betti (1, 1)\\nbetti: (1, 1) euler: 0\\nsphere cover: 8 vertices, 8 edges in 2 components\\ngeometry: conic.off With --cert the certificate is checked first and the model is\\nrebuilt from it (exit 3 if it does not replay); without it, topo\\nsolves from scratch. --off writes the spherical model as an OFF file\\n( nOFF beyond three variables); one-dimensional cells go to an .edges sidecar next to it, since OFF carries only polygons.","breadcrumbs":"Command line » topo — components and Betti numbers","id":"32","title":"topo — components and Betti numbers"},"33":{"body":"$ isoplex bench --count 3 --degree 3 --rng-seed 2\\n# status refinements cones depth solve_ms verify_ms\\n0 certified 6 32 2 72.7 40.2\\n1 certified 0 8 2 4.4 4.5\\n2 certified 1 12 2 6.9 8.4\\nsummary: 3/3 certified; solve mean 28.0 ms, max 72.7 ms; verify mean 17.7 ms, max 40.2 ms bench draws random dense polynomials ( --nvars, --degree, --rng-seed), runs the full solve–format–parse–replay pipeline on\\neach, and reports per-case and summary timings. It is the quickest way\\nto gauge how cost scales with degree and dimension on your machine.","breadcrumbs":"Command line » bench — random dense systems","id":"33","title":"bench — random dense systems"},"34":{"body":"$ isoplex solve conic.sys --format json\\n{\\"certificate\\":null,\\"cmd\\":\\"solve\\",\\"cones\\":8,\\"degrees\\":[2],\\"face_tests\\":26, \\"faces\\":26,\\"input\\":\\"conic.sys\\",\\"leaves\\":26,\\"m\\":1,\\"max_split_depth\\":0, \\"nvars\\":3,\\"refinements\\":0,\\"solve_ms\\":0.69,\\"status\\":\\"certified\\", \\"verified\\":true,\\"verify_ms\\":1.98} (The object is emitted on a single line; it is wrapped here for\\ndisplay.) verify, topo, and bench emit analogous records; bench\\nends with a bench-summary record aggregating the run.","breadcrumbs":"Command line » JSON output","id":"34","title":"JSON output"},"4":{"body":"Every term of a polynomial must have the same total degree, because\\nonly homogeneous polynomials define subsets of projective space: #![allow(unused)] fn main() {\\nuse isoplex::parse_system; // x0^2 has degree 2 but x1 has degree 1\\nassert!(parse_system(\\"x0^2 + x1\\\\n\\").is_err()); }","breadcrumbs":"Polynomials and systems » Homogeneity is enforced","id":"4","title":"Homogeneity is enforced"},"5":{"body":"A coefficient of zero contributes nothing to the polynomial but still\\ndeclares its variable. This matters: the same polynomial defines\\ndifferent varieties in different ambient spaces. #![allow(unused)] fn main() {\\nuse isoplex::parse_system; // a point in the projective line\\nlet point = parse_system(\\"x0 + 0 x1\\\\n\\").unwrap();\\nassert_eq!(point.nvars(), 2); // the same form as a line in the projective plane\\nlet line = parse_system(\\"x0 + 0 x2\\\\n\\").unwrap();\\nassert_eq!(line.nvars(), 3); }","breadcrumbs":"Polynomials and systems » Zero terms widen the ambient space","id":"5","title":"Zero terms widen the ambient space"},"6":{"body":"Coefficients are stored as exact rationals; a float copy is kept beside\\nthem for the search phase. Evaluation is available in both: #![allow(unused)] fn main() {\\nuse isoplex::parse_system; let sys = parse_system(\\"x0^2 + x1^2 - x2^2\\\\n\\").unwrap();\\nlet p = &sys.polys()[0];\\nassert_eq!(p.eval_f64(&[3.0, 4.0, 5.0]), 0.0);\\nassert_eq!(p.eval_f64(&[1.0, 1.0, 1.0]), 1.0); }","breadcrumbs":"Polynomials and systems » Exact and float views","id":"6","title":"Exact and float views"},"7":{"body":"For benchmarks and stress tests, random_bombieri draws a dense\\npolynomial whose coefficients are scaled so that no monomial dominates\\nby construction: #![allow(unused)] fn main() {\\nuse isoplex::poly::random_bombieri;\\nuse rand::SeedableRng;\\nuse rand_chacha::ChaCha8Rng; let mut rng = ChaCha8Rng::seed_from_u64(7);\\nlet p = random_bombieri(3, 6, &mut rng);\\nassert_eq!(p.nvars(), 3);\\nassert_eq!(p.degree(), 6);\\nassert_eq!(p.terms().len(), 28); // all 28 monomials of degree 6 appear } Systems of several equations are just several lines; solve accepts\\nthem as long as the number of equations stays below the number of\\nvariables, so the expected dimension of the zero set is nonnegative.","breadcrumbs":"Polynomials and systems » Random dense polynomials","id":"7","title":"Random dense polynomials"},"8":{"body":"All computation happens on a fan of simplicial cones: a family of\\ncones spanned by n linearly independent integer rays each, which\\ntogether cover ℝⁿ, overlap only along shared faces, and map to each\\nother under x ↦ -x. Intersected with the unit sphere, the fan is a\\nsimplicial decomposition of the sphere into curved triangles (in three\\nvariables) or higher simplices, and the antipodal symmetry means the\\nwhole structure descends to projective space.","breadcrumbs":"The spherical fan » The spherical fan","id":"8","title":"The spherical fan"},"9":{"body":"Decomposition::initial(n) is the fan of coordinate orthants — the\\ncone structure of the cross-polytope boundary. In three variables it is\\nthe octahedron: six rays ±e_i and eight orthant cones. #![allow(unused)] fn main() {\\nuse isoplex::Decomposition; let d = Decomposition::initial(3);\\nassert_eq!(d.num_vertices(), 6);\\nassert_eq!(d.num_cones(), 8); // rays are integer vectors; the first one is e0\\nlet e0: Vec<i32> = d.ray(0).iter().map(|c| c.try_into().unwrap()).collect();\\nassert_eq!(e0, vec![1, 0, 0]); // the antipodal map is a fixed-point-free involution on rays and cones\\nfor v in 0..d.num_vertices() { assert_ne!(d.antipode(v), v); assert_eq!(d.antipode(d.antipode(v)), v);\\n} // faces of all dimensions: 6 vertices + 12 edges + 8 triangles\\nassert_eq!(d.faces().len(), 26); } Rays are primitive integer vectors, not floats: every later certificate\\nclaim is stated in terms of these exact coordinates. A float unit\\nvector along each ray ( unit) is kept for heuristics only.","breadcrumbs":"The spherical fan » The initial fan","id":"9","title":"The initial fan"}},"length":35,"save":true},"fields":["title","body","breadcrumbs"],"index":{"body":{"root":{"0":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":2,"docs":{"1":{"tf":1.0},"20":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},".":{".":{"d":{".":{"df":0,"docs":{},"n":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"_":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"c":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"0":{"df":2,"docs":{"16":{"tf":2.0},"6":{"tf":1.0}}},"1":{"2":{"5":{"df":1,"docs":{"15":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":0,"docs":{}},"2":{"5":{"df":1,"docs":{"15":{"tf":1.7320508075688772}}},"df":1,"docs":{"15":{"tf":1.0}}},"3":{"df":1,"docs":{"15":{"tf":1.0}}},"5":{"df":1,"docs":{"15":{"tf":1.7320508075688772}}},"9":{"df":1,"docs":{"30":{"tf":1.0}}},"df":0,"docs":{}},"df":16,"docs":{"10":{"tf":1.0},"14":{"tf":1.7320508075688772},"15":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":3.3166247903554},"20":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.7320508075688772},"29":{"tf":1.0},"30":{"tf":1.4142135623730951},"31":{"tf":1.4142135623730951},"32":{"tf":1.0},"33":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}}},"1":{".":{"0":{"df":2,"docs":{"16":{"tf":2.449489742783178},"6":{"tf":1.7320508075688772}}},"9":{"df":1,"docs":{"30":{"tf":1.0}}},"df":0,"docs":{}},"/":{"2":{"df":2,"docs":{"1":{"tf":1.4142135623730951},"19":{"tf":1.0}}},"df":0,"docs":{}},"2":{"df":4,"docs":{"10":{"tf":1.0},"15":{"tf":1.4142135623730951},"33":{"tf":1.0},"9":{"tf":1.0}}},"5":{"9":{"2":{"0":{"1":{"/":{"1":{"6":{"0":{"0":{"0":{"0":{"df":1,"docs":{"3":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"6":{"4":{"4":{".":{"3":{"df":1,"docs":{"30":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"7":{".":{"7":{"df":1,"docs":{"33":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"8":{"1":{"df":1,"docs":{"30":{"tf":1.0}}},"df":0,"docs":{}},"df":13,"docs":{"1":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":3.1622776601683795},"22":{"tf":1.4142135623730951},"25":{"tf":1.4142135623730951},"26":{"tf":1.4142135623730951},"29":{"tf":1.0},"3":{"tf":1.0},"30":{"tf":1.4142135623730951},"31":{"tf":1.4142135623730951},"32":{"tf":2.6457513110645907},"33":{"tf":1.4142135623730951},"4":{"tf":1.0}},"e":{"df":1,"docs":{"15":{"tf":1.4142135623730951}}}},"2":{".":{"5":{"df":1,"docs":{"31":{"tf":1.0}}},"df":0,"docs":{}},"0":{"0":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"1":{"9":{"8":{"df":1,"docs":{"30":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":0,"docs":{}},"2":{"8":{"6":{"df":1,"docs":{"30":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":0,"docs":{}},"3":{"8":{"6":{".":{"0":{"df":1,"docs":{"30":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"6":{"df":3,"docs":{"30":{"tf":2.23606797749979},"31":{"tf":1.4142135623730951},"9":{"tf":1.0}}},"8":{".":{"0":{"df":1,"docs":{"33":{"tf":1.0}}},"df":0,"docs":{}},"df":1,"docs":{"7":{"tf":1.4142135623730951}}},"df":15,"docs":{"1":{"tf":1.7320508075688772},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"15":{"tf":1.4142135623730951},"19":{"tf":2.0},"25":{"tf":1.0},"26":{"tf":1.4142135623730951},"29":{"tf":1.0},"3":{"tf":2.449489742783178},"30":{"tf":1.7320508075688772},"31":{"tf":1.0},"32":{"tf":1.4142135623730951},"33":{"tf":2.23606797749979},"4":{"tf":1.0},"5":{"tf":1.0}},"i":{"+":{"1":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}},"df":1,"docs":{"10":{"tf":1.0}}}},"3":{"/":{"3":{"df":1,"docs":{"33":{"tf":1.0}}},"4":{"df":2,"docs":{"19":{"tf":1.0},"3":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"2":{"df":1,"docs":{"33":{"tf":1.0}}},"7":{"2":{"1":{"df":1,"docs":{"30":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":10,"docs":{"15":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951},"29":{"tf":1.0},"3":{"tf":1.0},"30":{"tf":1.4142135623730951},"31":{"tf":1.4142135623730951},"32":{"tf":1.4142135623730951},"33":{"tf":1.4142135623730951},"5":{"tf":1.0},"7":{"tf":1.0}}},"4":{".":{"0":{"df":1,"docs":{"6":{"tf":1.0}}},"4":{"df":1,"docs":{"33":{"tf":1.0}}},"5":{"df":1,"docs":{"33":{"tf":1.0}}},"df":0,"docs":{}},"0":{".":{"2":{"df":1,"docs":{"33":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":4,"docs":{"1":{"tf":1.0},"19":{"tf":1.4142135623730951},"30":{"tf":1.0},"32":{"tf":1.4142135623730951}}},"5":{".":{"0":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}},"df":1,"docs":{"3":{"tf":1.0}}},"6":{".":{"9":{"df":1,"docs":{"33":{"tf":1.0}}},"df":0,"docs":{}},"df":4,"docs":{"11":{"tf":1.0},"33":{"tf":1.0},"7":{"tf":1.7320508075688772},"9":{"tf":1.4142135623730951}}},"7":{"2":{".":{"7":{"df":1,"docs":{"33":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":0,"docs":{}},"3":{"2":{"df":1,"docs":{"30":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"8":{".":{"4":{"df":1,"docs":{"33":{"tf":1.0}}},"df":0,"docs":{}},"df":5,"docs":{"10":{"tf":1.0},"30":{"tf":1.0},"32":{"tf":1.4142135623730951},"33":{"tf":1.0},"9":{"tf":1.4142135623730951}}},"_":{"df":1,"docs":{"22":{"tf":1.0}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":1,"docs":{"15":{"tf":1.0}}}}}}}},"a":{"c":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":2,"docs":{"29":{"tf":1.0},"7":{"tf":1.0}}}}}},"df":0,"docs":{}},"d":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"11":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"10":{"tf":1.0}},"s":{"df":0,"docs":{},"t":{"df":5,"docs":{"14":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"24":{"tf":1.0},"26":{"tf":1.0}}}}}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":1,"docs":{"34":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"e":{"df":3,"docs":{"13":{"tf":1.0},"15":{"tf":1.0},"25":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"c":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{},"w":{"(":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"df":16,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.4142135623730951},"27":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}}}}}}},"df":1,"docs":{"3":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"2":{"tf":1.0}},"g":{"df":5,"docs":{"14":{"tf":1.0},"19":{"tf":1.0},"25":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":1,"docs":{"26":{"tf":1.0}}}}}}},"m":{"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":6,"docs":{"0":{"tf":1.0},"19":{"tf":1.0},"3":{"tf":1.0},"30":{"tf":1.4142135623730951},"31":{"tf":1.0},"5":{"tf":1.0}}}}}}},"df":0,"docs":{}},"n":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"df":1,"docs":{"34":{"tf":1.0}}}},"y":{"df":0,"docs":{},"z":{"df":3,"docs":{"2":{"tf":1.0},"24":{"tf":1.0},"26":{"tf":1.0}},"e":{"(":{"&":{"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"d":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"(":{"&":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{".":{"d":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":2,"docs":{"1":{"tf":1.0},"26":{"tf":1.4142135623730951}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"c":{"df":0,"docs":{},"x":{"df":1,"docs":{"25":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"d":{"df":9,"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"2":{"tf":1.0},"25":{"tf":1.4142135623730951},"26":{"tf":1.0},"27":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}}},"df":0,"docs":{}}}}},"y":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"19":{"tf":1.0}}}},"w":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"21":{"tf":1.0},"26":{"tf":1.0}}}}}}}},"p":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"22":{"tf":1.0}}}}},"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"df":2,"docs":{"3":{"tf":1.0},"7":{"tf":1.0}}}},"df":0,"docs":{}},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"12":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"14":{"tf":1.0},"20":{"tf":1.0}}}}}}}},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":6,"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"30":{"tf":1.0}}}}}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}}}}},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"!":{"(":{"!":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"a":{".":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"y":{"_":{"df":0,"docs":{},"f":{"a":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"(":{"&":{"d":{")":{".":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"10":{"tf":1.0}}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{},"f":{"a":{"c":{"df":0,"docs":{},"e":{".":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"22":{"tf":1.0}}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"(":{"a":{"df":1,"docs":{"15":{"tf":1.0}}},"b":{".":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"s":{"c":{"a":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"_":{"a":{"df":0,"docs":{},"t":{"(":{"&":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"m":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{".":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":1,"docs":{"27":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"m":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"t":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"22":{"tf":1.0}},"e":{"df":0,"docs":{},"s":{"!":{"(":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{".":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":3,"docs":{"1":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"(":{"&":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{".":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"s":{"_":{"df":0,"docs":{},"w":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"(":{"\\"":{"df":0,"docs":{},"o":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"\\\\":{"df":0,"docs":{},"n":{"df":1,"docs":{"27":{"tf":1.0}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"p":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"y":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"(":{"\\"":{"df":0,"docs":{},"x":{"0":{"^":{"2":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{".":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"s":{".":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"26":{"tf":1.0}}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"_":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{".":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"(":{")":{".":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"(":{"df":0,"docs":{},"|":{"b":{"df":1,"docs":{"1":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}}},"df":0,"docs":{},"f":{"a":{"c":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":0,"docs":{},"t":{".":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"s":{"_":{"df":0,"docs":{},"w":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"(":{"\\"":{"[":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"a":{"d":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"q":{"!":{"(":{"2":{"df":1,"docs":{"25":{"tf":1.0}}},"d":{".":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"e":{"(":{"d":{".":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"e":{"(":{"df":0,"docs":{},"v":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{},"f":{"a":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"(":{")":{".":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"9":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"n":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":2,"docs":{"10":{"tf":1.0},"9":{"tf":1.0}}}}},"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"c":{"df":2,"docs":{"10":{"tf":1.0},"9":{"tf":1.0}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"0":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{".":{"df":0,"docs":{},"n":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"p":{".":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"7":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"l":{"_":{"df":0,"docs":{},"f":{"6":{"4":{"(":{"&":{"[":{"1":{".":{"0":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"3":{".":{"0":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"n":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"s":{"(":{")":{".":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"7":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{".":{"df":0,"docs":{},"n":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{".":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":2,"docs":{"25":{"tf":1.0},"26":{"tf":1.0}}}}}}},"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":3,"docs":{"1":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.4142135623730951}}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":2,"docs":{"25":{"tf":1.0},"26":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"25":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}}}}}}},"s":{"df":0,"docs":{},"y":{"df":0,"docs":{},"s":{".":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"3":{"tf":1.0}}}}}}},"df":0,"docs":{},"m":{"df":1,"docs":{"3":{"tf":1.0}}},"n":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"3":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"n":{"df":0,"docs":{},"e":{"!":{"(":{"d":{".":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"e":{"(":{"df":0,"docs":{},"v":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"u":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"18":{"tf":1.0},"23":{"tf":1.0}}}}},"df":0,"docs":{}},"v":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":2,"docs":{"2":{"tf":1.0},"6":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"g":{"df":2,"docs":{"15":{"tf":1.0},"21":{"tf":1.0}}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"i":{"d":{"df":3,"docs":{"14":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.0}}},"df":0,"docs":{}}}}},"b":{")":{".":{"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"df":0,"docs":{}},".":{"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"b":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"d":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"(":{"0":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"s":{"c":{"a":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"_":{"a":{"df":0,"docs":{},"t":{"(":{"&":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"a":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"n":{"c":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"3":{"tf":1.0}}},"y":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":2,"docs":{"15":{"tf":1.0},"16":{"tf":1.0}}}}}}},"df":0,"docs":{}}}},"df":4,"docs":{"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"16":{"tf":1.0}},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":4,"docs":{"17":{"tf":1.0},"19":{"tf":1.0},"23":{"tf":1.0},"29":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":1,"docs":{"7":{"tf":1.0}}}}},"n":{"c":{"df":0,"docs":{},"h":{"df":2,"docs":{"33":{"tf":1.4142135623730951},"34":{"tf":1.7320508075688772}},"m":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"k":{"df":1,"docs":{"7":{"tf":1.0}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":3,"docs":{"12":{"tf":1.0},"15":{"tf":1.4142135623730951},"21":{"tf":1.0}},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{":":{":":{"df":0,"docs":{},"f":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"s":{"(":{"df":0,"docs":{},"p":{".":{"df":0,"docs":{},"f":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"a":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"15":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"s":{"df":0,"docs":{},"y":{"df":0,"docs":{},"s":{".":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"y":{"df":0,"docs":{},"s":{"(":{")":{"[":{"0":{"]":{".":{"df":0,"docs":{},"f":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"a":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"15":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}}}}},"s":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":3,"docs":{"0":{"tf":1.4142135623730951},"26":{"tf":1.4142135623730951},"32":{"tf":1.4142135623730951}}}},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":4,"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"19":{"tf":1.0},"3":{"tf":1.0}}}}}}},"y":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"32":{"tf":1.0}}},"df":0,"docs":{}}}}},"i":{"df":0,"docs":{},"g":{"df":1,"docs":{"21":{"tf":1.0}}},"n":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":3,"docs":{"14":{"tf":1.0},"2":{"tf":1.0},"29":{"tf":1.0}}}}},"df":0,"docs":{}},"t":{"df":2,"docs":{"25":{"tf":1.4142135623730951},"30":{"tf":1.0}}}},"l":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"k":{"df":1,"docs":{"3":{"tf":1.0}}}}},"df":0,"docs":{},"o":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"3":{"tf":1.0}}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":6,"docs":{"14":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"27":{"tf":1.0},"6":{"tf":1.0}}}},"u":{"df":0,"docs":{},"n":{"d":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":3,"docs":{"14":{"tf":1.0},"26":{"tf":1.0},"9":{"tf":1.0}}}}},"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}}}},"u":{"d":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":3,"docs":{"14":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"d":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"(":{"&":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{".":{"d":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":2,"docs":{"25":{"tf":1.0},"27":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":4,"docs":{"1":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.4142135623730951}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"c":{".":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"y":{"_":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"(":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"(":{")":{")":{".":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}},"a":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":2,"docs":{"2":{"tf":1.0},"26":{"tf":1.0}}}},"n":{"d":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":3,"docs":{"14":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":7,"docs":{"12":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":1.0},"25":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0},"32":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"e":{"df":2,"docs":{"0":{"tf":1.0},"33":{"tf":1.0}}}},"u":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":1,"docs":{"22":{"tf":1.0}}}}}},"v":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"28":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":1,"docs":{"19":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":6,"docs":{"0":{"tf":1.0},"25":{"tf":1.7320508075688772},"26":{"tf":1.4142135623730951},"27":{"tf":1.4142135623730951},"28":{"tf":1.0},"32":{"tf":1.4142135623730951}}}},"r":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"23":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"17":{"tf":1.0}}}}}}},"df":4,"docs":{"1":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"22":{"tf":1.4142135623730951},"32":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"22":{"tf":1.0}}}}}}},"i":{"df":0,"docs":{},"f":{"df":17,"docs":{"0":{"tf":2.0},"1":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"17":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951},"2":{"tf":1.7320508075688772},"22":{"tf":2.0},"23":{"tf":1.4142135623730951},"24":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.7320508075688772},"30":{"tf":1.4142135623730951},"31":{"tf":1.0},"32":{"tf":1.0},"9":{"tf":1.0}},"i":{"c":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"\\"":{":":{"df":0,"docs":{},"n":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{",":{"\\"":{"c":{"df":0,"docs":{},"m":{"d":{"\\"":{":":{"\\"":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"\\"":{",":{"\\"":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"\\"":{":":{"8":{",":{"\\"":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"\\"":{":":{"[":{"2":{"]":{",":{"\\"":{"df":0,"docs":{},"f":{"a":{"c":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"s":{"\\"":{":":{"2":{"6":{"df":1,"docs":{"34":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":3,"docs":{"0":{"tf":1.0},"30":{"tf":1.7320508075688772},"33":{"tf":2.0}}}}}}}},"h":{"a":{"c":{"df":0,"docs":{},"h":{"a":{"8":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{":":{":":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"d":{"_":{"df":0,"docs":{},"f":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"_":{"df":0,"docs":{},"u":{"6":{"4":{"(":{"0":{"df":1,"docs":{"11":{"tf":1.0}}},"7":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"10":{"tf":1.0}}}},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"17":{"tf":1.0},"2":{"tf":1.0}}}}}},"r":{"a":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"26":{"tf":1.0}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"t":{"df":6,"docs":{"12":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"31":{"tf":1.0}}}}}},"c":{"df":0,"docs":{},"k":{"_":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":3,"docs":{"2":{"tf":1.0},"20":{"tf":1.4142135623730951},"22":{"tf":1.0}},"i":{"c":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"(":{"&":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":2,"docs":{"20":{"tf":1.0},"22":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}},"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}},"df":7,"docs":{"11":{"tf":1.0},"14":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.4142135623730951},"26":{"tf":1.0},"30":{"tf":1.0},"32":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":6,"docs":{"0":{"tf":1.0},"18":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951},"2":{"tf":1.0},"21":{"tf":1.4142135623730951},"23":{"tf":1.0}}}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"i":{"c":{"df":2,"docs":{"22":{"tf":1.0},"26":{"tf":1.0}}},"df":0,"docs":{}}}},"i":{"df":0,"docs":{},"r":{"c":{"df":0,"docs":{},"l":{"df":2,"docs":{"1":{"tf":1.0},"25":{"tf":1.4142135623730951}},"e":{"\\\\":{"df":0,"docs":{},"n":{"3":{"/":{"4":{"df":1,"docs":{"3":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"l":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":6,"docs":{"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"2":{"tf":1.4142135623730951},"22":{"tf":1.4142135623730951},"31":{"tf":1.4142135623730951},"9":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"df":2,"docs":{"17":{"tf":1.0},"21":{"tf":1.0}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"11":{"tf":1.0}}}}}}},"o":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"df":1,"docs":{"14":{"tf":1.0}}}}},"d":{"df":0,"docs":{},"e":{"df":1,"docs":{"29":{"tf":1.4142135623730951}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"i":{"df":11,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":2.23606797749979},"21":{"tf":1.4142135623730951},"23":{"tf":1.0},"26":{"tf":1.0},"3":{"tf":1.4142135623730951},"31":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"’":{"df":1,"docs":{"21":{"tf":1.0}}}}}}}},"df":0,"docs":{}}}}},"f":{"a":{"c":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"n":{"df":2,"docs":{"19":{"tf":1.4142135623730951},"21":{"tf":1.0}}}}}},"m":{"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":3,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"14":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":1,"docs":{"25":{"tf":1.0}}},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"2":{"tf":1.0},"27":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"3":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"10":{"tf":1.0}}}}},"p":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"27":{"tf":1.0}}}}}}},"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":3,"docs":{"0":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"n":{"df":3,"docs":{"0":{"tf":1.4142135623730951},"26":{"tf":1.4142135623730951},"32":{"tf":1.7320508075688772}}},"s":{"df":3,"docs":{"12":{"tf":1.0},"15":{"tf":1.0},"21":{"tf":1.0}}}},"u":{"df":0,"docs":{},"t":{"df":4,"docs":{"0":{"tf":1.0},"26":{"tf":1.0},"28":{"tf":1.0},"8":{"tf":1.0}}}}}},"n":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":8,"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":2.0},"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"28":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}}},"df":13,"docs":{"10":{"tf":2.449489742783178},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"19":{"tf":1.7320508075688772},"2":{"tf":1.0},"20":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"30":{"tf":1.4142135623730951},"33":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.7320508075688772}},"’":{"df":4,"docs":{"12":{"tf":1.0},"13":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0}}}},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"19":{"tf":1.0}}}}}},"i":{"c":{".":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":3,"docs":{"30":{"tf":1.4142135623730951},"31":{"tf":1.0},"32":{"tf":1.0}}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":1,"docs":{"32":{"tf":1.4142135623730951}}}}},"s":{"df":0,"docs":{},"i":{"df":4,"docs":{"30":{"tf":1.0},"31":{"tf":1.4142135623730951},"32":{"tf":1.0},"34":{"tf":1.0}}}}},"df":1,"docs":{"30":{"tf":1.0}}},"df":0,"docs":{}},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"df":0,"docs":{}}},"n":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"26":{"tf":1.0}}}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"26":{"tf":1.0}}}}},"t":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"3":{"tf":1.0}}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":3,"docs":{"11":{"tf":1.0},"23":{"tf":1.0},"7":{"tf":1.0}}}},"df":0,"docs":{}}}}},"t":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":3,"docs":{"10":{"tf":1.0},"14":{"tf":1.0},"26":{"tf":1.0}}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"5":{"tf":1.0}}}}},"df":0,"docs":{}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}}}},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"21":{"tf":1.0}}}},"x":{"df":6,"docs":{"0":{"tf":1.0},"14":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"2":{"tf":1.0},"25":{"tf":1.0},"28":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"r":{"d":{"df":1,"docs":{"19":{"tf":1.0}},"i":{"df":0,"docs":{},"n":{"df":4,"docs":{"15":{"tf":1.0},"2":{"tf":1.0},"25":{"tf":1.0},"9":{"tf":1.4142135623730951}}}}},"df":0,"docs":{}}},"p":{"df":0,"docs":{},"i":{"df":2,"docs":{"27":{"tf":1.0},"6":{"tf":1.0}}}},"s":{"df":0,"docs":{},"t":{"df":2,"docs":{"17":{"tf":1.0},"33":{"tf":1.0}}}},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":3,"docs":{"22":{"tf":1.0},"30":{"tf":1.0},"33":{"tf":1.0}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":5,"docs":{"2":{"tf":1.0},"21":{"tf":1.0},"25":{"tf":1.0},"32":{"tf":1.0},"8":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":4,"docs":{"14":{"tf":1.0},"2":{"tf":1.0},"26":{"tf":1.0},"9":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"v":{"df":2,"docs":{"27":{"tf":1.0},"8":{"tf":1.0}}}},"t":{"df":4,"docs":{"10":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":1.0},"24":{"tf":1.0}}}},"x":{"df":2,"docs":{"25":{"tf":1.0},"27":{"tf":1.0}}}},"d":{".":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"y":{"(":{"0":{")":{".":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"(":{")":{".":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"p":{"(":{"df":0,"docs":{},"|":{"c":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"(":{"0":{"df":2,"docs":{"10":{"tf":1.0},"11":{"tf":1.0}}},"4":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"d":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"(":{"&":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"11":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"a":{"df":0,"docs":{},"t":{"a":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}}},"df":3,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"9":{"tf":1.0}},"e":{"c":{"df":0,"docs":{},"i":{"d":{"df":2,"docs":{"15":{"tf":1.0},"21":{"tf":1.0}}},"df":0,"docs":{},"s":{"df":5,"docs":{"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"31":{"tf":1.0}}}},"l":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"8":{"tf":1.0}},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{":":{":":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"l":{"(":{"3":{"df":2,"docs":{"10":{"tf":1.0},"9":{"tf":1.0}}},"4":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{},"n":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":2,"docs":{"17":{"tf":1.0},"23":{"tf":1.0}}}},"f":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":1,"docs":{"30":{"tf":1.0}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":3,"docs":{"19":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"26":{"tf":1.0}}}}}}},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":7,"docs":{"19":{"tf":1.4142135623730951},"30":{"tf":1.4142135623730951},"31":{"tf":1.0},"32":{"tf":1.0},"33":{"tf":1.7320508075688772},"4":{"tf":1.7320508075688772},"7":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"22":{"tf":1.0}}}}},"df":0,"docs":{}},"t":{"a":{"df":1,"docs":{"10":{"tf":1.4142135623730951}}},"df":0,"docs":{}}},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"21":{"tf":1.0}}}}}},"s":{"df":2,"docs":{"33":{"tf":1.0},"7":{"tf":1.0}}}},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":4,"docs":{"14":{"tf":1.0},"21":{"tf":1.0},"30":{"tf":1.7320508075688772},"33":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":3,"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0}}}}},"s":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"0":{"tf":1.0},"8":{"tf":1.0}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"i":{"b":{"df":1,"docs":{"28":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"t":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"18":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.0}}}}}}}}}}}},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"5":{"tf":1.4142135623730951}}}}}},"g":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"17":{"tf":1.0},"23":{"tf":1.0}}}}},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":6,"docs":{"19":{"tf":1.0},"27":{"tf":1.0},"3":{"tf":1.0},"33":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":2,"docs":{"27":{"tf":1.0},"32":{"tf":1.0}}}}}}}}},"r":{"df":1,"docs":{"19":{"tf":1.0}},"e":{"c":{"df":0,"docs":{},"t":{"df":8,"docs":{"11":{"tf":1.0},"14":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"27":{"tf":1.0}}}}}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"j":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"11":{"tf":1.0}}}}}}},"p":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"y":{"df":1,"docs":{"34":{"tf":1.0}}}},"df":0,"docs":{}},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"14":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"22":{"tf":1.0}}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"h":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}}}}},"v":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"21":{"tf":1.0}}},"df":0,"docs":{}}}},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"7":{"tf":1.0}}}}},"t":{"df":2,"docs":{"16":{"tf":1.0},"21":{"tf":1.0}}}},"r":{"a":{"df":0,"docs":{},"w":{"df":2,"docs":{"33":{"tf":1.0},"7":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{")":{".":{"a":{"b":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"0":{"df":2,"docs":{"10":{"tf":1.0},"9":{"tf":1.4142135623730951}}},"1":{"df":1,"docs":{"10":{"tf":1.0}}},"_":{"df":0,"docs":{},"i":{"df":2,"docs":{"10":{"tf":1.4142135623730951},"9":{"tf":1.0}}}},"a":{"c":{"df":0,"docs":{},"h":{"df":13,"docs":{"10":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.7320508075688772},"17":{"tf":1.0},"19":{"tf":2.23606797749979},"2":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"33":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"14":{"tf":1.0}}}},"n":{"df":1,"docs":{"12":{"tf":1.0}}}}},"d":{"df":0,"docs":{},"g":{"df":6,"docs":{"10":{"tf":2.23606797749979},"15":{"tf":1.0},"19":{"tf":1.0},"27":{"tf":2.0},"32":{"tf":1.7320508075688772},"9":{"tf":1.0}}}},"df":1,"docs":{"15":{"tf":1.0}},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":1,"docs":{"9":{"tf":1.0}}}}}},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"26":{"tf":1.0}}}}}}}},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"23":{"tf":1.0},"34":{"tf":1.4142135623730951}}}},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":2,"docs":{"14":{"tf":1.0},"26":{"tf":1.0}}}}}},"n":{"d":{"df":2,"docs":{"3":{"tf":1.0},"34":{"tf":1.0}},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"10":{"tf":1.4142135623730951}}}}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"c":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":1,"docs":{"2":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"10":{"tf":1.0},"14":{"tf":1.0}}}}}}},"q":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"t":{"df":14,"docs":{"0":{"tf":1.7320508075688772},"12":{"tf":1.0},"14":{"tf":2.23606797749979},"15":{"tf":1.0},"19":{"tf":1.7320508075688772},"2":{"tf":1.0},"21":{"tf":1.4142135623730951},"24":{"tf":1.0},"28":{"tf":1.0},"3":{"tf":1.0},"30":{"tf":1.4142135623730951},"31":{"tf":1.4142135623730951},"32":{"tf":1.0},"7":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"o":{"d":{"df":2,"docs":{"17":{"tf":1.0},"23":{"tf":1.0}}},"df":0,"docs":{}},"r":{"(":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{":":{":":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"22":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"22":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":2,"docs":{"22":{"tf":1.0},"31":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"t":{"a":{"b":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"h":{"df":1,"docs":{"28":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"26":{"tf":1.0},"32":{"tf":1.0}}}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":2,"docs":{"15":{"tf":1.0},"6":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"18":{"tf":1.0}}},"r":{"df":0,"docs":{},"y":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"17":{"tf":1.0}}}},"w":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"14":{"tf":1.0}}}}}}}}},"i":{"d":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}}},"x":{"a":{"c":{"df":0,"docs":{},"t":{"df":13,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"17":{"tf":1.7320508075688772},"19":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":11,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"28":{"tf":1.0},"30":{"tf":1.4142135623730951},"31":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":2,"docs":{"29":{"tf":1.0},"30":{"tf":1.0}}}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"24":{"tf":1.0}}}},"t":{"df":4,"docs":{"29":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.4142135623730951},"32":{"tf":1.0}}}},"p":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}},"l":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":3,"docs":{"16":{"tf":1.0},"24":{"tf":1.0},"27":{"tf":1.0}}}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"3":{"tf":1.4142135623730951}}},"r":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"o":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"(":{"&":{"c":{"df":0,"docs":{},"x":{"df":1,"docs":{"27":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"27":{"tf":1.4142135623730951}}}}}},"df":0,"docs":{}}},"s":{"df":1,"docs":{"29":{"tf":1.0}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"19":{"tf":1.0}}}}}}},"t":{"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"24":{"tf":1.0},"28":{"tf":1.0}}}},"df":1,"docs":{"17":{"tf":1.0}}},"df":0,"docs":{}}}}},"f":{"6":{"4":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}},"a":{"c":{"df":0,"docs":{},"e":{"df":17,"docs":{"10":{"tf":1.0},"12":{"tf":1.4142135623730951},"13":{"tf":1.4142135623730951},"14":{"tf":2.8284271247461903},"15":{"tf":1.7320508075688772},"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":2.0},"2":{"tf":2.449489742783178},"21":{"tf":1.0},"22":{"tf":1.4142135623730951},"23":{"tf":1.4142135623730951},"25":{"tf":1.0},"30":{"tf":2.6457513110645907},"31":{"tf":1.7320508075688772},"8":{"tf":1.0},"9":{"tf":1.0}},"s":{"\\"":{":":{"2":{"6":{",":{"\\"":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"\\"":{":":{"\\"":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"c":{".":{"df":0,"docs":{},"s":{"df":0,"docs":{},"y":{"df":0,"docs":{},"s":{"\\"":{",":{"\\"":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"\\"":{":":{"2":{"6":{",":{"\\"":{"df":0,"docs":{},"m":{"\\"":{":":{"1":{",":{"\\"":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"x":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"_":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"\\"":{":":{"0":{"df":1,"docs":{"34":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"’":{"df":2,"docs":{"14":{"tf":1.0},"21":{"tf":1.0}}}},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":3,"docs":{"10":{"tf":1.0},"14":{"tf":1.0},"3":{"tf":1.4142135623730951}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":5,"docs":{"14":{"tf":1.0},"17":{"tf":1.4142135623730951},"22":{"tf":1.7320508075688772},"23":{"tf":1.0},"31":{"tf":1.0}}},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"0":{"tf":1.4142135623730951}}}}},"l":{"df":0,"docs":{},"s":{"df":2,"docs":{"17":{"tf":1.0},"31":{"tf":1.0}}}},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"8":{"tf":1.0}}}}}},"n":{"df":10,"docs":{"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.7320508075688772},"18":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":2.449489742783178},"20":{"tf":1.0},"30":{"tf":1.7320508075688772},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"w":{"df":1,"docs":{"15":{"tf":1.0}}}},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"26":{"tf":1.0}}},"df":0,"docs":{}}},"l":{"df":0,"docs":{},"e":{"df":5,"docs":{"18":{"tf":1.0},"27":{"tf":2.0},"29":{"tf":1.4142135623730951},"31":{"tf":1.4142135623730951},"32":{"tf":1.0}}}},"n":{"d":{"df":1,"docs":{"26":{"tf":1.0}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":3,"docs":{"12":{"tf":1.0},"32":{"tf":1.0},"9":{"tf":1.0}}}}},"x":{"df":2,"docs":{"19":{"tf":1.0},"9":{"tf":1.0}}}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":1,"docs":{"22":{"tf":1.0}}}},"o":{"a":{"df":0,"docs":{},"t":{"df":7,"docs":{"0":{"tf":1.0},"17":{"tf":1.7320508075688772},"18":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.7320508075688772},"6":{"tf":1.0},"9":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"n":{"df":16,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.4142135623730951},"27":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}}},"o":{"df":0,"docs":{},"l":{"d":{"df":2,"docs":{"2":{"tf":1.0},"26":{"tf":1.0}}},"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":1,"docs":{"3":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"_":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":2,"docs":{"20":{"tf":1.0},"22":{"tf":1.0}},"i":{"c":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"(":{"&":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":2,"docs":{"20":{"tf":1.0},"22":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}},"df":2,"docs":{"29":{"tf":1.4142135623730951},"34":{"tf":1.0}}}},"df":3,"docs":{"15":{"tf":1.7320508075688772},"31":{"tf":1.0},"5":{"tf":1.0}}}},"u":{"df":0,"docs":{},"r":{"df":4,"docs":{"1":{"tf":1.4142135623730951},"10":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0}}}}},"r":{"a":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"3":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":2,"docs":{"21":{"tf":1.0},"9":{"tf":1.0}}},"s":{"df":0,"docs":{},"h":{"df":1,"docs":{"30":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":2,"docs":{"3":{"tf":1.0},"33":{"tf":1.0}}}},"n":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":2,"docs":{"13":{"tf":1.0},"15":{"tf":1.0}}}}}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"23":{"tf":1.0}}}}}}}}},"g":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"30":{"tf":1.0}}},"u":{"df":0,"docs":{},"g":{"df":1,"docs":{"33":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"21":{"tf":1.4142135623730951}}}}},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":1,"docs":{"17":{"tf":1.0}},"i":{"df":1,"docs":{"32":{"tf":1.0}}}}}}}},"t":{"df":1,"docs":{"10":{"tf":1.0}}}},"i":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":1,"docs":{"19":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"o":{"b":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"26":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"u":{"df":2,"docs":{"2":{"tf":1.0},"25":{"tf":1.0}}}},"o":{"df":1,"docs":{"32":{"tf":1.0}}},"r":{"a":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":6,"docs":{"12":{"tf":1.0},"14":{"tf":1.7320508075688772},"16":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0}}}}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"3":{"tf":1.0}}}},"df":0,"docs":{}}},"p":{"df":0,"docs":{},"h":{"df":1,"docs":{"14":{"tf":1.0}}}}},"df":0,"docs":{}},"u":{"a":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":3,"docs":{"2":{"tf":1.0},"30":{"tf":1.4142135623730951},"31":{"tf":1.0}},"e":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"t":{"df":2,"docs":{"0":{"tf":1.0},"28":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"d":{"df":1,"docs":{"17":{"tf":1.4142135623730951}},"s":{":":{":":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"(":{")":{".":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"_":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"16":{"tf":1.0}}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"h":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"f":{"df":4,"docs":{"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"25":{"tf":1.0}}},"v":{"df":2,"docs":{"15":{"tf":1.4142135623730951},"2":{"tf":1.0}}}},"p":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"8":{"tf":1.0}}}}}},"r":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"30":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"a":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"19":{"tf":1.4142135623730951}}}}},"df":0,"docs":{}},"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":2,"docs":{"26":{"tf":1.0},"34":{"tf":1.0}}}},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"9":{"tf":1.0}}}}}}}},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"8":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"l":{"d":{"df":4,"docs":{"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"19":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"m":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":3,"docs":{"0":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"df":2,"docs":{"26":{"tf":1.0},"28":{"tf":1.0}}}}}}},"p":{"df":0,"docs":{},"e":{"df":1,"docs":{"23":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":2,"docs":{"14":{"tf":1.0},"16":{"tf":1.0}}}}},"y":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"n":{"df":1,"docs":{"25":{"tf":1.0}}}},"df":0,"docs":{}}}}}}}},"i":{"/":{"df":0,"docs":{},"o":{"df":1,"docs":{"29":{"tf":1.0}}}},"d":{"df":3,"docs":{"10":{"tf":1.4142135623730951},"19":{"tf":1.7320508075688772},"22":{"tf":1.0}},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":3,"docs":{"14":{"tf":1.0},"15":{"tf":1.0},"30":{"tf":1.0}},"i":{"df":0,"docs":{},"f":{"df":1,"docs":{"25":{"tf":1.0}},"i":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"i":{"df":1,"docs":{"30":{"tf":1.0}}}},"df":0,"docs":{}}},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"0":{"tf":1.0}}}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"17":{"tf":1.0}}}}}}},"n":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":3,"docs":{"23":{"tf":1.0},"31":{"tf":1.0},"8":{"tf":1.0}}},"df":0,"docs":{}}}},"x":{"df":1,"docs":{"3":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"df":1,"docs":{"21":{"tf":1.0}}}}},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"12":{"tf":1.0}}}}}},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"30":{"tf":1.0}}}}},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"14":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0}}}}},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":5,"docs":{"19":{"tf":1.4142135623730951},"21":{"tf":1.0},"29":{"tf":1.0},"3":{"tf":1.0},"30":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"26":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"10":{"tf":1.0}}}}},"i":{"d":{"df":2,"docs":{"16":{"tf":1.0},"24":{"tf":1.0}}},"df":0,"docs":{}},"t":{"df":0,"docs":{},"e":{"a":{"d":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":11,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":2.23606797749979},"23":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.4142135623730951}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"11":{"tf":1.0}}}}},"n":{"df":1,"docs":{"26":{"tf":1.0}}},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"’":{"df":1,"docs":{"2":{"tf":1.4142135623730951}}}}}},"df":8,"docs":{"13":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"2":{"tf":1.7320508075688772},"21":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"8":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"d":{"df":2,"docs":{"10":{"tf":1.0},"2":{"tf":1.0}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"11":{"tf":1.0}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"9":{"tf":1.0}}}}}}}},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"12":{"tf":1.0}}},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{":":{":":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{":":{":":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"15":{"tf":1.4142135623730951}}}}}}}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}}},"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{"_":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"c":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"(":{"&":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":1,"docs":{"1":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"d":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":3,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"9":{"tf":1.0}}}}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"_":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"c":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"(":{"&":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":1,"docs":{"1":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"g":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"r":{"d":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{":":{":":{"df":0,"docs":{},"{":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"p":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"_":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"c":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"(":{"&":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":0,"docs":{},"t":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"1":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"y":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":5,"docs":{"15":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}}}}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"y":{":":{":":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"_":{"b":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"7":{"tf":1.0}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"{":{"a":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"y":{"df":0,"docs":{},"z":{"df":3,"docs":{"1":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.4142135623730951}}}}}},"df":0,"docs":{}}},"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"d":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":1,"docs":{"27":{"tf":1.0}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"=":{"d":{"df":0,"docs":{},"e":{"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"g":{"df":1,"docs":{"29":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":10,"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.4142135623730951},"31":{"tf":1.4142135623730951},"32":{"tf":1.0},"33":{"tf":1.0},"34":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":2,"docs":{"30":{"tf":1.4142135623730951},"31":{"tf":1.0}},"i":{"df":1,"docs":{"0":{"tf":1.4142135623730951}}}}}}}},"t":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"f":{"df":3,"docs":{"15":{"tf":1.0},"20":{"tf":1.0},"24":{"tf":1.0}}}}}}}},"j":{"df":1,"docs":{"19":{"tf":1.4142135623730951}},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":2,"docs":{"29":{"tf":1.4142135623730951},"34":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}}},"k":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":4,"docs":{"10":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":1.0}}}},"p":{"df":0,"docs":{},"t":{"df":3,"docs":{"22":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}}}},"y":{"df":1,"docs":{"12":{"tf":1.0}}}},"n":{"df":0,"docs":{},"o":{"b":{"df":1,"docs":{"30":{"tf":1.0}}},"df":0,"docs":{}}}},"l":{"a":{"df":0,"docs":{},"m":{"df":1,"docs":{"15":{"tf":1.0}}},"n":{"d":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"g":{"df":1,"docs":{"23":{"tf":1.0}},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"3":{"tf":1.0}}}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"9":{"tf":1.0}}}}}},"df":2,"docs":{"19":{"tf":1.0},"22":{"tf":1.0}},"e":{"a":{"df":0,"docs":{},"f":{"df":3,"docs":{"14":{"tf":1.4142135623730951},"21":{"tf":1.4142135623730951},"22":{"tf":1.0}}},"v":{"df":3,"docs":{"2":{"tf":1.0},"30":{"tf":2.0},"31":{"tf":1.0}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{".":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"s":{"c":{"a":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"_":{"a":{"df":0,"docs":{},"t":{"(":{"&":{"df":0,"docs":{},"u":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":2,"docs":{"15":{"tf":1.4142135623730951},"19":{"tf":1.0}}}},"t":{"df":1,"docs":{"10":{"tf":1.0}}}},"i":{"b":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"2":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"df":4,"docs":{"0":{"tf":1.0},"13":{"tf":1.4142135623730951},"24":{"tf":1.0},"25":{"tf":1.4142135623730951}},"l":{"df":0,"docs":{},"i":{"df":2,"docs":{"2":{"tf":1.0},"8":{"tf":1.0}}}}}},"df":11,"docs":{"19":{"tf":1.0},"2":{"tf":1.0},"22":{"tf":1.0},"27":{"tf":1.4142135623730951},"29":{"tf":1.0},"3":{"tf":2.0},"30":{"tf":1.0},"31":{"tf":1.0},"34":{"tf":1.0},"5":{"tf":1.7320508075688772},"7":{"tf":1.0}}}},"s":{"df":0,"docs":{},"t":{"df":4,"docs":{"10":{"tf":1.0},"19":{"tf":1.4142135623730951},"21":{"tf":1.0},"27":{"tf":1.4142135623730951}}}},"v":{"df":0,"docs":{},"e":{"df":4,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0}}}}},"o":{"c":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"7":{"tf":1.0}}}},"o":{"df":0,"docs":{},"p":{"df":2,"docs":{"2":{"tf":1.0},"30":{"tf":1.0}}}},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"21":{"tf":1.0}}}}}},"m":{"a":{"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":3,"docs":{"0":{"tf":1.0},"29":{"tf":1.0},"33":{"tf":1.0}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":16,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.4142135623730951},"27":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}}}},"k":{"df":0,"docs":{},"e":{"df":4,"docs":{"12":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"23":{"tf":1.0}}}},"l":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":3,"docs":{"22":{"tf":1.0},"29":{"tf":1.0},"31":{"tf":1.0}}}}}}},"n":{"df":0,"docs":{},"i":{"df":1,"docs":{"16":{"tf":1.0}}}},"p":{"df":4,"docs":{"0":{"tf":1.0},"26":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}}},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":3,"docs":{"16":{"tf":1.0},"17":{"tf":1.7320508075688772},"23":{"tf":1.4142135623730951}}}}}},"t":{"c":{"df":0,"docs":{},"h":{"df":3,"docs":{"14":{"tf":1.0},"16":{"tf":1.0},"22":{"tf":1.0}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"c":{"df":1,"docs":{"26":{"tf":1.0}}},"df":0,"docs":{},"x":{"df":2,"docs":{"12":{"tf":1.0},"15":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"5":{"tf":1.0}}}}}},"x":{"df":2,"docs":{"30":{"tf":2.0},"33":{"tf":1.4142135623730951}}}},"df":4,"docs":{"14":{"tf":1.0},"19":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0}},"e":{"a":{"df":0,"docs":{},"n":{"df":5,"docs":{"23":{"tf":1.0},"29":{"tf":1.0},"3":{"tf":1.7320508075688772},"33":{"tf":1.4142135623730951},"8":{"tf":1.0}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"29":{"tf":1.0}}}}}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"h":{"df":1,"docs":{"0":{"tf":1.0}}}}},"i":{"d":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"10":{"tf":1.0},"15":{"tf":1.0}}}}}}}},"df":0,"docs":{},"n":{"df":1,"docs":{"16":{"tf":1.0}}},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"10":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":1,"docs":{"13":{"tf":1.0}}}}}}}},"s":{"df":2,"docs":{"22":{"tf":1.0},"3":{"tf":1.0}}}}},"o":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":11,"docs":{"0":{"tf":2.449489742783178},"13":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":1.4142135623730951},"24":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.4142135623730951},"28":{"tf":1.4142135623730951},"30":{"tf":1.4142135623730951},"31":{"tf":1.0},"32":{"tf":1.4142135623730951}}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":1,"docs":{"7":{"tf":1.4142135623730951}}}}}}},"s":{"df":3,"docs":{"30":{"tf":2.0},"31":{"tf":1.0},"33":{"tf":2.0}}},"u":{"df":0,"docs":{},"t":{"df":3,"docs":{"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951}}}}},"n":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":1,"docs":{"31":{"tf":1.0}}}},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"26":{"tf":1.0}}}}}},"df":2,"docs":{"26":{"tf":1.0},"8":{"tf":1.0}},"e":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{},"e":{"d":{"df":2,"docs":{"18":{"tf":1.0},"25":{"tf":1.0}}},"df":0,"docs":{}},"g":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"0":{"tf":1.0},"21":{"tf":1.0}}}}},"w":{"df":1,"docs":{"10":{"tf":2.0}}},"x":{"df":0,"docs":{},"t":{"df":1,"docs":{"32":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":2,"docs":{"27":{"tf":1.0},"32":{"tf":1.0}}}},"n":{"df":1,"docs":{"26":{"tf":1.0}},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":1,"docs":{"7":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"16":{"tf":1.4142135623730951}}}},"df":2,"docs":{"10":{"tf":1.0},"16":{"tf":1.0}}}},"t":{"df":0,"docs":{},"h":{"df":3,"docs":{"18":{"tf":1.0},"23":{"tf":1.0},"5":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":6,"docs":{"0":{"tf":1.7320508075688772},"19":{"tf":1.0},"22":{"tf":1.0},"26":{"tf":1.0},"31":{"tf":1.0},"7":{"tf":1.4142135623730951}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"11":{"tf":1.0}}}}}},"v":{"a":{"df":0,"docs":{},"r":{"df":2,"docs":{"19":{"tf":1.0},"33":{"tf":1.0}},"s":{"\\"":{":":{"3":{",":{"\\"":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"s":{"\\"":{":":{"0":{",":{"\\"":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"m":{"df":0,"docs":{},"s":{"\\"":{":":{"0":{".":{"6":{"9":{",":{"\\"":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"\\"":{":":{"\\"":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":1,"docs":{"34":{"tf":1.0}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"o":{"b":{"df":0,"docs":{},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":3,"docs":{"24":{"tf":1.0},"29":{"tf":1.0},"34":{"tf":1.0}}}},"df":0,"docs":{}}}},"c":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":2,"docs":{"30":{"tf":1.0},"9":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}},"n":{"c":{"df":2,"docs":{"12":{"tf":1.0},"24":{"tf":1.0}}},"df":17,"docs":{"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"13":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"17":{"tf":1.0},"19":{"tf":1.4142135623730951},"2":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0},"3":{"tf":1.7320508075688772},"32":{"tf":1.0},"9":{"tf":1.0}}},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"3":{"tf":1.0}}}}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"26":{"tf":1.4142135623730951}}}}},"g":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":2,"docs":{"15":{"tf":1.0},"16":{"tf":1.4142135623730951}},"’":{"df":1,"docs":{"14":{"tf":1.0}}}}}}},"t":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"2":{"tf":1.0},"9":{"tf":1.4142135623730951}}}}},"df":0,"docs":{}}}},"u":{"df":0,"docs":{},"t":{"df":4,"docs":{"13":{"tf":1.0},"2":{"tf":1.0},"22":{"tf":1.0},"30":{"tf":1.0}},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":2,"docs":{"0":{"tf":1.0},"29":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"27":{"tf":1.0}}},"df":0,"docs":{}}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":2,"docs":{"1":{"tf":1.0},"30":{"tf":1.0}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"14":{"tf":1.4142135623730951},"25":{"tf":1.0},"26":{"tf":1.7320508075688772}},"l":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"8":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"p":{".":{"df":0,"docs":{},"e":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"l":{"_":{"df":0,"docs":{},"f":{"6":{"4":{"(":{"&":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"m":{")":{")":{".":{"a":{"b":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"(":{")":{".":{"df":0,"docs":{},"z":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"(":{"&":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"l":{")":{".":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"p":{"(":{"df":0,"docs":{},"|":{"(":{"a":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"c":{"!":{"(":{"\\"":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}}}}},"t":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":1,"docs":{"22":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"r":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":2,"docs":{"14":{"tf":1.0},"15":{"tf":1.0}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"15":{"tf":1.7320508075688772}}}}},"s":{"df":2,"docs":{"11":{"tf":1.0},"22":{"tf":1.4142135623730951}},"e":{"_":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":2,"docs":{"20":{"tf":1.0},"22":{"tf":1.0}},"i":{"c":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"(":{"\\"":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"c":{"df":1,"docs":{"22":{"tf":1.0}}},"df":0,"docs":{}}}},"&":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"d":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"22":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":0,"docs":{},"t":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"y":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"(":{"\\"":{"df":0,"docs":{},"x":{"0":{"^":{"2":{"df":7,"docs":{"15":{"tf":1.4142135623730951},"20":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.4142135623730951},"27":{"tf":1.0},"6":{"tf":1.0}}},"df":0,"docs":{}},"df":1,"docs":{"5":{"tf":1.4142135623730951}}},"df":0,"docs":{}}},"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":0,"docs":{},"t":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"3":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":6,"docs":{"1":{"tf":1.4142135623730951},"20":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.4142135623730951},"27":{"tf":1.0}}}}}}}}},"df":0,"docs":{}}},"t":{"df":1,"docs":{"14":{"tf":1.0}}}},"s":{"df":0,"docs":{},"s":{"df":2,"docs":{"13":{"tf":1.0},"14":{"tf":1.0}}}},"t":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"12":{"tf":1.0}}}},"df":0,"docs":{},"h":{"df":2,"docs":{"22":{"tf":1.7320508075688772},"31":{"tf":1.4142135623730951}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":2,"docs":{"19":{"tf":1.0},"21":{"tf":1.0}}}}}}}},"df":6,"docs":{"14":{"tf":3.1622776601683795},"15":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":8,"docs":{"10":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"26":{"tf":1.0},"29":{"tf":1.0},"3":{"tf":1.0},"30":{"tf":1.0},"33":{"tf":1.0}}}},"h":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"6":{"tf":1.0}}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"e":{"c":{"df":1,"docs":{"26":{"tf":1.0}},"e":{"df":0,"docs":{},"w":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":2,"docs":{"0":{"tf":1.0},"13":{"tf":1.0}}}}}}},"df":0,"docs":{}},"n":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"22":{"tf":1.0}}}}}}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":2,"docs":{"29":{"tf":1.0},"33":{"tf":1.0}}}}}}}},"l":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"18":{"tf":1.0}}}},"n":{"df":0,"docs":{},"e":{"df":2,"docs":{"25":{"tf":1.0},"5":{"tf":1.0}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}},"u":{"df":1,"docs":{"3":{"tf":1.0}}}},"o":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":7,"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"23":{"tf":1.0},"5":{"tf":1.4142135623730951},"9":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"y":{"df":0,"docs":{},"g":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":2,"docs":{"27":{"tf":1.0},"32":{"tf":1.0}}}}},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"’":{"df":1,"docs":{"15":{"tf":1.0}}}}},"df":9,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.4142135623730951},"29":{"tf":1.0},"3":{"tf":1.4142135623730951},"33":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951},"7":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":2,"docs":{"25":{"tf":1.0},"9":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"l":{"df":2,"docs":{"12":{"tf":1.0},"19":{"tf":1.0}}}},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":11,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.4142135623730951},"26":{"tf":1.0},"28":{"tf":1.0}}}}},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"3":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":1,"docs":{"21":{"tf":1.0}}}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"v":{"df":2,"docs":{"10":{"tf":1.0},"21":{"tf":1.0}}}}}}},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"9":{"tf":1.0}}}}}},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":5,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0},"31":{"tf":1.0}},"t":{"df":3,"docs":{"14":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"29":{"tf":1.0}}}}}}},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":10,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.7320508075688772},"27":{"tf":1.0},"30":{"tf":1.4142135623730951},"31":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.4142135623730951},"8":{"tf":1.0}}}},"df":0,"docs":{}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"0":{"tf":1.0}}}}}}},"v":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"2":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"df":1,"docs":{"15":{"tf":1.4142135623730951}}}}}},"t":{"df":1,"docs":{"16":{"tf":1.4142135623730951}}}},"q":{"df":1,"docs":{"25":{"tf":1.4142135623730951}},"u":{"a":{"d":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{},"i":{"c":{"df":1,"docs":{"26":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"c":{".":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":1,"docs":{"30":{"tf":1.0}}}}},"df":2,"docs":{"1":{"tf":1.0},"30":{"tf":1.0}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"16":{"tf":1.0}}}}}}}},"i":{"c":{"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"33":{"tf":1.0}}}}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":4,"docs":{"2":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0},"32":{"tf":1.0}}}}}}}}}},"r":{"a":{"d":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"27":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{},"n":{"d":{":":{":":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"d":{"a":{"b":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":2,"docs":{"11":{"tf":1.0},"7":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"_":{"c":{"df":0,"docs":{},"h":{"a":{"c":{"df":0,"docs":{},"h":{"a":{":":{":":{"c":{"df":0,"docs":{},"h":{"a":{"c":{"df":0,"docs":{},"h":{"a":{"8":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":2,"docs":{"11":{"tf":1.0},"7":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"_":{"b":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"(":{"3":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"df":1,"docs":{"7":{"tf":1.0}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":4,"docs":{"11":{"tf":1.0},"20":{"tf":1.4142135623730951},"30":{"tf":1.0},"33":{"tf":1.0}}}}},"df":0,"docs":{},"g":{"df":2,"docs":{"15":{"tf":1.0},"22":{"tf":1.0}}},"k":{"df":1,"docs":{"26":{"tf":1.0}}}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":5,"docs":{"0":{"tf":1.4142135623730951},"19":{"tf":1.0},"25":{"tf":1.4142135623730951},"3":{"tf":1.0},"6":{"tf":1.0}}}}}},"y":{"df":10,"docs":{"10":{"tf":2.0},"12":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":1.4142135623730951},"2":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":2.23606797749979}}}},"df":2,"docs":{"19":{"tf":1.0},"22":{"tf":1.0}},"e":{"a":{"d":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"29":{"tf":1.0}}}},"df":0,"docs":{}},"df":1,"docs":{"29":{"tf":1.0}}},"df":0,"docs":{},"l":{"df":2,"docs":{"0":{"tf":1.0},"26":{"tf":1.0}}},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":2,"docs":{"22":{"tf":1.7320508075688772},"31":{"tf":1.0}}}}}},"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":1,"docs":{"32":{"tf":1.0}}}}}}},"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"19":{"tf":1.0}}}}}},"r":{"d":{"df":4,"docs":{"17":{"tf":1.0},"18":{"tf":1.0},"23":{"tf":1.0},"34":{"tf":1.4142135623730951}}},"df":0,"docs":{}}}},"d":{"df":0,"docs":{},"u":{"c":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}}},"df":8,"docs":{"1":{"tf":1.4142135623730951},"18":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.4142135623730951},"22":{"tf":1.4142135623730951},"25":{"tf":1.0},"26":{"tf":1.4142135623730951},"27":{"tf":1.0}},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":8,"docs":{"10":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":2.23606797749979},"33":{"tf":1.0}},"e":{"(":{"a":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"l":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"28":{"tf":1.0}}}},"df":0,"docs":{}}}},"g":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"14":{"tf":1.4142135623730951}}}}}},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":4,"docs":{"19":{"tf":1.0},"22":{"tf":1.4142135623730951},"29":{"tf":1.0},"31":{"tf":1.0}}}},"df":0,"docs":{}}},"l":{"df":1,"docs":{"17":{"tf":1.0}},"e":{"df":0,"docs":{},"v":{"df":1,"docs":{"14":{"tf":1.0}}}}},"m":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"23":{"tf":1.0}}}}},"df":0,"docs":{}},"n":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"27":{"tf":1.0}}}}},"df":0,"docs":{}},"p":{"a":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":1,"docs":{"15":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{}},"l":{"a":{"c":{"df":2,"docs":{"10":{"tf":1.0},"15":{"tf":1.0}}},"df":0,"docs":{},"y":{"df":12,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"17":{"tf":1.7320508075688772},"2":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.7320508075688772},"29":{"tf":1.0},"30":{"tf":1.7320508075688772},"31":{"tf":1.0},"32":{"tf":1.0}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{".":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"s":{".":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"(":{")":{".":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"(":{"df":0,"docs":{},"|":{"&":{"df":0,"docs":{},"n":{"df":1,"docs":{"26":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{},"z":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"(":{"&":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{".":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"_":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"25":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{},"f":{"a":{"c":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"l":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"v":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":8,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.4142135623730951},"25":{"tf":1.0},"26":{"tf":1.7320508075688772},"28":{"tf":1.4142135623730951},"33":{"tf":1.0}}}}}},"s":{".":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"d":{"df":0,"docs":{},"e":{".":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"a":{"c":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":4,"docs":{"1":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.4142135623730951},"27":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"c":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":2,"docs":{"14":{"tf":1.0},"2":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":2,"docs":{"25":{"tf":1.0},"30":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":2,"docs":{"10":{"tf":1.0},"2":{"tf":1.0}}}}},"i":{"df":0,"docs":{},"r":{"df":1,"docs":{"10":{"tf":1.0}}}},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":1,"docs":{"27":{"tf":1.0}}}}}}},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"k":{"df":1,"docs":{"14":{"tf":1.0}},"i":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"n":{"df":0,"docs":{},"g":{"df":3,"docs":{"11":{"tf":1.4142135623730951},"33":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"21":{"tf":1.0}}},"df":0,"docs":{}}},"w":{"df":1,"docs":{"21":{"tf":1.4142135623730951}}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":1,"docs":{"13":{"tf":1.0}}}},"n":{"df":6,"docs":{"17":{"tf":1.0},"23":{"tf":1.0},"26":{"tf":1.0},"3":{"tf":1.0},"33":{"tf":1.0},"34":{"tf":1.0}}}}},"s":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":6,"docs":{"0":{"tf":2.0},"14":{"tf":1.7320508075688772},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.4142135623730951}}},"p":{"df":0,"docs":{},"l":{"df":1,"docs":{"0":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":1,"docs":{"14":{"tf":1.4142135623730951}}}}}}}},"c":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":2,"docs":{"33":{"tf":1.0},"7":{"tf":1.0}}}}},"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":1,"docs":{"21":{"tf":1.0}}}}}},"r":{"a":{"df":0,"docs":{},"t":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"32":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":1,"docs":{"17":{"tf":1.0}}}}}}}}},"df":2,"docs":{"19":{"tf":1.7320508075688772},"25":{"tf":1.4142135623730951}},"e":{"a":{"df":0,"docs":{},"r":{"c":{"df":0,"docs":{},"h":{"df":6,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.4142135623730951},"31":{"tf":1.0},"6":{"tf":1.0}},"’":{"df":1,"docs":{"23":{"tf":1.0}}}}},"df":0,"docs":{}}},"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":3,"docs":{"19":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"d":{"df":3,"docs":{"20":{"tf":1.0},"30":{"tf":1.0},"33":{"tf":1.4142135623730951}}},"df":2,"docs":{"0":{"tf":1.0},"2":{"tf":1.4142135623730951}}},"p":{"a":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"(":{"&":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{":":{":":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}}}}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":1,"docs":{"16":{"tf":1.0}}}}}}}}}}}}},"df":7,"docs":{"0":{"tf":1.0},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"2":{"tf":1.0},"26":{"tf":1.0},"3":{"tf":1.0},"30":{"tf":1.0}}}},"df":2,"docs":{"19":{"tf":1.4142135623730951},"21":{"tf":1.0}}},"t":{"df":10,"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":1.7320508075688772},"24":{"tf":1.0},"25":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.4142135623730951},"31":{"tf":1.0},"7":{"tf":1.0}},"t":{"df":0,"docs":{},"l":{"df":1,"docs":{"15":{"tf":1.0}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"7":{"tf":1.4142135623730951}}}}}},"h":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":3,"docs":{"12":{"tf":1.0},"25":{"tf":1.0},"8":{"tf":1.0}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"15":{"tf":1.0}}}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":1,"docs":{"30":{"tf":1.0}}}}},"i":{"d":{"df":0,"docs":{},"e":{"c":{"a":{"df":0,"docs":{},"r":{"df":2,"docs":{"27":{"tf":1.0},"32":{"tf":1.0}}}},"df":0,"docs":{}},"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"_":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"s":{"(":{"df":0,"docs":{},"m":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"df":8,"docs":{"0":{"tf":1.0},"14":{"tf":2.0},"17":{"tf":1.0},"19":{"tf":2.0},"2":{"tf":1.0},"21":{"tf":2.0},"22":{"tf":1.0},"3":{"tf":1.0}},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"c":{"df":2,"docs":{"17":{"tf":1.0},"23":{"tf":1.0}}},"df":0,"docs":{}}}}}},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"21":{"tf":1.0}}}}}},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":5,"docs":{"12":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":2.0},"24":{"tf":1.0},"25":{"tf":1.4142135623730951}}}},"i":{"c":{"df":1,"docs":{"8":{"tf":1.0}},"i":{"df":1,"docs":{"8":{"tf":1.4142135623730951}}}},"df":1,"docs":{"23":{"tf":1.0}}}}}},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"l":{"df":2,"docs":{"0":{"tf":1.0},"34":{"tf":1.0}}}}},"t":{"df":1,"docs":{"15":{"tf":1.0}}},"x":{"df":1,"docs":{"9":{"tf":1.0}}}},"k":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":2,"docs":{"3":{"tf":1.0},"30":{"tf":1.0}}}}},"l":{"a":{"b":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"e":{"df":2,"docs":{"15":{"tf":1.0},"25":{"tf":1.0}}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"24":{"tf":1.0}}}},"v":{"df":13,"docs":{"1":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.4142135623730951},"26":{"tf":1.4142135623730951},"27":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":2.0},"32":{"tf":1.0},"33":{"tf":1.0},"34":{"tf":1.0},"7":{"tf":1.0}},"e":{"(":{"&":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":6,"docs":{"1":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.4142135623730951},"27":{"tf":1.0}}}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"m":{"df":1,"docs":{"33":{"tf":1.0}}}},"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"m":{"df":6,"docs":{"1":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.4142135623730951},"27":{"tf":1.0}},"s":{":":{":":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":6,"docs":{"1":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.4142135623730951},"27":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"r":{"df":7,"docs":{"10":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"23":{"tf":1.0},"31":{"tf":1.0}},"’":{"df":1,"docs":{"18":{"tf":1.0}}}},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":3,"docs":{"1":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0}},"s":{":":{":":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":3,"docs":{"1":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"–":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"–":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"–":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"y":{"df":1,"docs":{"33":{"tf":1.0}}}},"df":0,"docs":{}}}}}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}}}}}},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"15":{"tf":1.0}}}}}}},"p":{"a":{"c":{"df":0,"docs":{},"e":{"df":6,"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"26":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}}}},"df":0,"docs":{},"n":{"df":2,"docs":{"11":{"tf":1.0},"8":{"tf":1.0}}}},"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":8,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"2":{"tf":1.0},"25":{"tf":1.7320508075688772},"26":{"tf":1.7320508075688772},"27":{"tf":1.0},"32":{"tf":1.0},"8":{"tf":1.4142135623730951}}},"i":{"c":{"df":5,"docs":{"10":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":1.0},"27":{"tf":1.0},"32":{"tf":1.0}}},"df":0,"docs":{}}}}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":6,"docs":{"10":{"tf":1.7320508075688772},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951},"21":{"tf":1.0},"30":{"tf":2.0}}}}},"o":{"df":0,"docs":{},"t":{"df":3,"docs":{"11":{"tf":1.0},"20":{"tf":1.0},"30":{"tf":1.0}}}}},"t":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":1,"docs":{"2":{"tf":1.0}}}},"n":{"d":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"23":{"tf":1.0}}}}},"r":{"d":{"df":2,"docs":{"12":{"tf":1.0},"15":{"tf":1.4142135623730951}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"r":{"df":1,"docs":{"10":{"tf":1.0}},"t":{"df":2,"docs":{"2":{"tf":1.0},"3":{"tf":1.0}}}},"t":{"df":0,"docs":{},"e":{"df":2,"docs":{"21":{"tf":1.0},"9":{"tf":1.0}},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"12":{"tf":1.0},"28":{"tf":1.0}}}}}}},"u":{"df":2,"docs":{"30":{"tf":1.4142135623730951},"33":{"tf":1.0}}}},"y":{"df":2,"docs":{"21":{"tf":1.0},"7":{"tf":1.0}}}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":1,"docs":{"29":{"tf":1.0}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":1,"docs":{"12":{"tf":1.0}}}},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":2,"docs":{"26":{"tf":1.0},"5":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"6":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"7":{"tf":1.0}}}}},"i":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"14":{"tf":1.4142135623730951},"19":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":4,"docs":{"14":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"31":{"tf":1.0}}}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"22":{"tf":1.0}}}},"p":{"df":1,"docs":{"10":{"tf":1.0}}}},"u":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":5,"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"17":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"u":{"b":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"19":{"tf":1.0}}}},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"2":{"tf":1.0},"29":{"tf":1.4142135623730951}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"d":{"df":4,"docs":{"14":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0}}},"df":0,"docs":{},"s":{"df":4,"docs":{"15":{"tf":1.4142135623730951},"17":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.0}}}}}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":2,"docs":{"14":{"tf":1.0},"4":{"tf":1.0}}}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"15":{"tf":1.0}}}}}}}}},"c":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"29":{"tf":1.0}}}}}},"df":0,"docs":{},"h":{"df":1,"docs":{"26":{"tf":1.0}}}},"df":0,"docs":{},"m":{"df":2,"docs":{"26":{"tf":1.0},"3":{"tf":1.0}},"m":{"a":{"df":0,"docs":{},"r":{"df":2,"docs":{"2":{"tf":1.0},"24":{"tf":1.0}},"i":{"df":2,"docs":{"33":{"tf":1.4142135623730951},"34":{"tf":1.0}}}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"f":{"a":{"c":{"df":1,"docs":{"26":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":3,"docs":{"1":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.0}}}}}}},"y":{"df":9,"docs":{"1":{"tf":1.0},"15":{"tf":1.4142135623730951},"20":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.4142135623730951},"27":{"tf":1.0},"3":{"tf":1.0},"6":{"tf":1.0}},"m":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":1,"docs":{"0":{"tf":1.0}},"i":{"df":2,"docs":{"10":{"tf":1.0},"8":{"tf":1.0}}}}}}}},"n":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"x":{"df":1,"docs":{"22":{"tf":1.0}}}},"df":0,"docs":{}}},"s":{".":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"y":{"df":0,"docs":{},"s":{"(":{")":{"[":{"0":{"df":2,"docs":{"15":{"tf":1.0},"6":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":11,"docs":{"0":{"tf":1.4142135623730951},"13":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951},"2":{"tf":1.4142135623730951},"25":{"tf":1.0},"28":{"tf":1.4142135623730951},"29":{"tf":1.7320508075688772},"30":{"tf":1.4142135623730951},"31":{"tf":1.0},"32":{"tf":1.0},"7":{"tf":1.0}}}}}}}},"t":{"a":{"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"df":1,"docs":{"0":{"tf":1.0}}}},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"22":{"tf":1.0}},"e":{"d":{".":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"31":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":1,"docs":{"19":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":3,"docs":{"3":{"tf":1.7320508075688772},"4":{"tf":1.0},"9":{"tf":1.0}}}},"s":{"df":0,"docs":{},"t":{"df":9,"docs":{"11":{"tf":1.0},"12":{"tf":1.7320508075688772},"13":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":1.4142135623730951},"26":{"tf":1.0},"28":{"tf":1.0},"30":{"tf":1.4142135623730951},"7":{"tf":1.0}}}},"x":{"df":0,"docs":{},"t":{".":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"22":{"tf":1.0}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"a":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"22":{"tf":1.4142135623730951}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":6,"docs":{"1":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.7320508075688772},"3":{"tf":1.4142135623730951}}}}},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":2,"docs":{"17":{"tf":1.0},"23":{"tf":1.0}}}}}}}},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"30":{"tf":1.0}},"g":{"df":1,"docs":{"3":{"tf":1.0}}}},"r":{"d":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"14":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"e":{"a":{"d":{"df":1,"docs":{"30":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"df":7,"docs":{"0":{"tf":1.0},"19":{"tf":1.0},"27":{"tf":1.0},"3":{"tf":1.0},"32":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":3,"docs":{"15":{"tf":1.0},"2":{"tf":1.0},"26":{"tf":1.0}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"21":{"tf":1.0}}}}}}}}}}},"i":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"19":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"m":{"df":0,"docs":{},"e":{"df":3,"docs":{"13":{"tf":1.0},"22":{"tf":1.0},"33":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":2,"docs":{"0":{"tf":1.0},"8":{"tf":1.0}}}}}},"l":{"df":1,"docs":{"16":{"tf":1.7320508075688772}},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"25":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"0":{"tf":1.0}}}},"p":{"df":0,"docs":{},"o":{"df":2,"docs":{"32":{"tf":1.4142135623730951},"34":{"tf":1.0}},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"df":3,"docs":{"0":{"tf":1.4142135623730951},"2":{"tf":1.4142135623730951},"26":{"tf":1.0}}}}}}},"r":{"df":0,"docs":{},"u":{"df":1,"docs":{"26":{"tf":1.0}}}},"t":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"4":{"tf":1.0}}}},"df":0,"docs":{}}},"r":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"df":1,"docs":{"14":{"tf":1.0}}}}}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"17":{"tf":1.0}},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"10":{"tf":1.0}}}}}}}},"df":0,"docs":{},"e":{"df":9,"docs":{"14":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.0}}}},"i":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"l":{"df":3,"docs":{"16":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}}}}}},"df":1,"docs":{"16":{"tf":1.0}}},"u":{"df":0,"docs":{},"e":{"df":1,"docs":{"28":{"tf":1.0}}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}}}}}},"w":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"e":{"df":1,"docs":{"12":{"tf":1.0}}}},"df":0,"docs":{}},"o":{"df":10,"docs":{"10":{"tf":1.7320508075688772},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"2":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.4142135623730951},"26":{"tf":1.0},"3":{"tf":1.0},"30":{"tf":1.0}}}}},"u":{"0":{"df":1,"docs":{"15":{"tf":1.4142135623730951}}},"1":{"/":{"2":{"df":1,"docs":{"15":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":1,"docs":{"15":{"tf":1.0}}},"2":{"df":1,"docs":{"15":{"tf":1.4142135623730951}}},"df":1,"docs":{"15":{"tf":1.0}},"n":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"28":{"tf":1.0}}}}},"df":0,"docs":{}}}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"0":{"tf":1.0},"15":{"tf":1.4142135623730951},"8":{"tf":1.0}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":2,"docs":{"14":{"tf":1.0},"31":{"tf":1.0}}}}}}}},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"26":{"tf":1.0}}}},"q":{"df":0,"docs":{},"u":{"df":1,"docs":{"13":{"tf":1.0}}}},"t":{"df":5,"docs":{"0":{"tf":1.0},"27":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.4142135623730951}}}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"k":{"df":1,"docs":{"17":{"tf":1.0}}}}},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"21":{"tf":1.0}}}}}},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"1":{"tf":1.0}}}},"df":0,"docs":{}}}},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"22":{"tf":1.0}}}}},"s":{"df":18,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":2.0},"15":{"tf":2.0},"16":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.4142135623730951},"27":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.7320508075688772},"9":{"tf":1.0}},"u":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"31":{"tf":1.0}}}},"df":0,"docs":{}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}},"u":{"df":3,"docs":{"19":{"tf":1.4142135623730951},"2":{"tf":1.0},"30":{"tf":1.0}}}},"r":{"df":0,"docs":{},"i":{"a":{"b":{"df":0,"docs":{},"l":{"df":9,"docs":{"27":{"tf":1.0},"3":{"tf":2.0},"30":{"tf":1.4142135623730951},"31":{"tf":1.0},"32":{"tf":1.4142135623730951},"5":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":4,"docs":{"0":{"tf":1.0},"26":{"tf":1.0},"28":{"tf":1.0},"5":{"tf":1.0}}}}}}}},"df":2,"docs":{"19":{"tf":1.7320508075688772},"9":{"tf":1.7320508075688772}},"e":{"c":{"!":{"[":{"1":{".":{"0":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}},"df":4,"docs":{"1":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0},"9":{"tf":1.0}}},"2":{"df":1,"docs":{"3":{"tf":1.0}}},"3":{".":{"0":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"c":{"!":{"[":{"1":{".":{"0":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"2":{".":{"0":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"<":{"df":0,"docs":{},"i":{"3":{"2":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":1,"docs":{"16":{"tf":1.4142135623730951}},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":5,"docs":{"10":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"21":{"tf":1.0},"9":{"tf":1.7320508075688772}}}}}},"df":0,"docs":{},"r":{"b":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"28":{"tf":1.0}}}}}},"df":0,"docs":{}},"d":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"17":{"tf":1.4142135623730951},"23":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":1,"docs":{"31":{"tf":1.0}},"i":{"df":5,"docs":{"0":{"tf":1.0},"30":{"tf":2.0},"31":{"tf":1.7320508075688772},"33":{"tf":1.0},"34":{"tf":1.0}},"e":{"d":{"\\"":{":":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"u":{"df":0,"docs":{},"e":{",":{"\\"":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"y":{"_":{"df":0,"docs":{},"m":{"df":0,"docs":{},"s":{"\\"":{":":{"1":{".":{"9":{"8":{"df":1,"docs":{"34":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"y":{"_":{"df":0,"docs":{},"m":{"df":1,"docs":{"33":{"tf":1.0}}}},"df":0,"docs":{}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":3,"docs":{"10":{"tf":1.4142135623730951},"15":{"tf":1.0},"19":{"tf":1.0}}}},"i":{"c":{"df":6,"docs":{"0":{"tf":1.0},"19":{"tf":1.4142135623730951},"25":{"tf":1.0},"27":{"tf":1.0},"32":{"tf":1.4142135623730951},"9":{"tf":1.0}}},"df":0,"docs":{}}}}}},"w":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"k":{"df":1,"docs":{"21":{"tf":1.0}}},"l":{"df":1,"docs":{"30":{"tf":1.4142135623730951}}}},"t":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"29":{"tf":1.0}}}},"df":0,"docs":{}},"y":{"df":5,"docs":{"13":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":1.0},"22":{"tf":1.0},"33":{"tf":1.0}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":1,"docs":{"10":{"tf":1.0}}}}}},"l":{"df":0,"docs":{},"l":{"df":1,"docs":{"31":{"tf":1.0}}}}},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"a":{"c":{"df":1,"docs":{"3":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":3,"docs":{"12":{"tf":1.0},"14":{"tf":1.0},"8":{"tf":1.0}}}},"s":{"df":0,"docs":{},"e":{"df":3,"docs":{"10":{"tf":1.0},"2":{"tf":1.0},"7":{"tf":1.0}}}}}},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"16":{"tf":1.0},"21":{"tf":1.0}},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":2,"docs":{"30":{"tf":1.0},"32":{"tf":1.0}}}}}}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"k":{"df":3,"docs":{"10":{"tf":1.0},"18":{"tf":1.0},"30":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"30":{"tf":1.0}}}}}}},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"34":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":4,"docs":{"14":{"tf":1.0},"2":{"tf":1.0},"27":{"tf":1.4142135623730951},"32":{"tf":1.0}},"r":{"df":1,"docs":{"18":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"22":{"tf":1.0}}}}}}},"x":{"0":{"^":{"2":{"df":3,"docs":{"1":{"tf":1.4142135623730951},"3":{"tf":2.0},"4":{"tf":1.0}}},"3":{"df":2,"docs":{"1":{"tf":1.0},"3":{"tf":1.0}}},"4":{"df":2,"docs":{"1":{"tf":1.0},"3":{"tf":1.0}}},"df":0,"docs":{}},"df":2,"docs":{"1":{"tf":1.0},"3":{"tf":1.4142135623730951}}},"1":{"\\\\":{"df":0,"docs":{},"n":{"\\"":{")":{".":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":1,"docs":{"4":{"tf":1.0}}}}}},"df":0,"docs":{}}},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"^":{"2":{"df":9,"docs":{"1":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"20":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.4142135623730951},"27":{"tf":1.0},"3":{"tf":1.7320508075688772},"6":{"tf":1.0}}},"3":{"\\\\":{"df":0,"docs":{},"n":{"df":1,"docs":{"1":{"tf":1.0}}}},"df":0,"docs":{}},"4":{"df":2,"docs":{"1":{"tf":1.0},"3":{"tf":1.0}}},"df":0,"docs":{}},"df":3,"docs":{"1":{"tf":1.0},"3":{"tf":1.7320508075688772},"4":{"tf":1.0}}},"2":{"\\\\":{"df":0,"docs":{},"n":{"\\"":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"^":{"2":{"\\\\":{"df":0,"docs":{},"n":{"\\"":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":7,"docs":{"15":{"tf":1.4142135623730951},"20":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0},"6":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"3":{"tf":1.0}}}},"df":3,"docs":{"1":{"tf":1.4142135623730951},"26":{"tf":1.0},"3":{"tf":1.7320508075688772}}},"4":{"df":2,"docs":{"1":{"tf":1.0},"3":{"tf":1.0}}},"df":0,"docs":{}},"df":1,"docs":{"3":{"tf":1.4142135623730951}}},"3":{"^":{"2":{"\\\\":{"df":0,"docs":{},"n":{"\\"":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"26":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":3,"docs":{"0":{"tf":1.4142135623730951},"16":{"tf":1.0},"8":{"tf":1.4142135623730951}}},"y":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}}}}},"z":{"/":{"2":{"df":2,"docs":{"0":{"tf":1.0},"26":{"tf":1.7320508075688772}}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":11,"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":2.0},"24":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0},"30":{"tf":1.4142135623730951},"31":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}}}}}}}},"breadcrumbs":{"root":{"a":{"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"5":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"33":{"tf":1.0}}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"15":{"tf":1.0}}}}}}}}},"t":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":2,"docs":{"26":{"tf":1.0},"32":{"tf":1.0}}}}}}},"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":1,"docs":{"25":{"tf":1.0}}}},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":7,"docs":{"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"31":{"tf":1.0}},"i":{"df":2,"docs":{"28":{"tf":1.0},"30":{"tf":1.0}}}}}}}},"h":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"21":{"tf":1.0}}}}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"i":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{}}}}},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":6,"docs":{"29":{"tf":1.4142135623730951},"30":{"tf":1.0},"31":{"tf":1.0},"32":{"tf":1.0},"33":{"tf":1.0},"34":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"1":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"n":{"df":2,"docs":{"26":{"tf":1.0},"32":{"tf":1.0}}}}}},"n":{"df":0,"docs":{},"e":{"df":1,"docs":{"12":{"tf":1.0}}}}}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":2,"docs":{"33":{"tf":1.0},"7":{"tf":1.0}}}}},"i":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}}},"s":{"a":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":1,"docs":{"17":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"z":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"1":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"c":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}}}}},"x":{"a":{"c":{"df":0,"docs":{},"t":{"df":8,"docs":{"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.0},"6":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"27":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"25":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"f":{"a":{"c":{"df":0,"docs":{},"e":{"df":5,"docs":{"13":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"22":{"tf":1.0}}}}}},"n":{"df":5,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":1,"docs":{"19":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"o":{"a":{"df":0,"docs":{},"t":{"df":2,"docs":{"17":{"tf":1.0},"6":{"tf":1.0}}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{}}}}},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"27":{"tf":1.0}}}}}}}}}},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"28":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"m":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"4":{"tf":1.0}}}}}}}}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"9":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":1,"docs":{"17":{"tf":1.0}}},"r":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"14":{"tf":1.0}}}}}}}}},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":3,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"2":{"tf":1.0}}}}}}}},"t":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"f":{"df":1,"docs":{"23":{"tf":1.0}}}}}}}},"j":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"34":{"tf":1.0}}}}}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":7,"docs":{"1":{"tf":1.0},"29":{"tf":1.4142135623730951},"30":{"tf":1.0},"31":{"tf":1.0},"32":{"tf":1.0},"33":{"tf":1.0},"34":{"tf":1.0}}}}}},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"h":{"df":1,"docs":{"12":{"tf":1.0}}}}},"o":{"d":{"df":0,"docs":{},"e":{"df":1,"docs":{"22":{"tf":1.0}},"l":{"df":6,"docs":{"24":{"tf":1.4142135623730951},"25":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0},"30":{"tf":1.0}}}}},"df":0,"docs":{}}},"n":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"26":{"tf":1.0},"32":{"tf":1.0}}}}},"df":0,"docs":{}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"34":{"tf":1.0}}}}}}}},"p":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"2":{"tf":1.0}}}}}}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"y":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":5,"docs":{"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.4142135623730951}}}}}}}}},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":1,"docs":{"17":{"tf":1.0}}}}}}}},"r":{"a":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":2,"docs":{"33":{"tf":1.0},"7":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"21":{"tf":1.0}}}}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"10":{"tf":1.0}}}}},"p":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"y":{"df":7,"docs":{"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"31":{"tf":1.0}}}},"df":0,"docs":{}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}}}},"u":{"df":0,"docs":{},"n":{"df":1,"docs":{"1":{"tf":1.0}}}}},"s":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":1,"docs":{"23":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"v":{"df":1,"docs":{"30":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"23":{"tf":1.0}}}}}}},"p":{"a":{"c":{"df":0,"docs":{},"e":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"c":{"df":5,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}}},"df":0,"docs":{}}}}}},"t":{"a":{"df":0,"docs":{},"n":{"d":{"a":{"df":0,"docs":{},"r":{"d":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"y":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":7,"docs":{"14":{"tf":1.0},"3":{"tf":1.4142135623730951},"33":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}}}}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"5":{"tf":1.0}}}},"s":{"df":0,"docs":{},"t":{"df":5,"docs":{"13":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":1,"docs":{"32":{"tf":1.0}},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"df":5,"docs":{"24":{"tf":1.4142135623730951},"25":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0}}}}}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":1,"docs":{"20":{"tf":1.0}}}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":1,"docs":{"31":{"tf":1.0}}}}}}},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"w":{"df":1,"docs":{"6":{"tf":1.0}}}}}},"w":{"df":0,"docs":{},"i":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"5":{"tf":1.0}}}}},"df":0,"docs":{}}},"z":{"/":{"2":{"df":1,"docs":{"26":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":1,"docs":{"5":{"tf":1.0}}}}}}}},"title":{"root":{"a":{"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"5":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"33":{"tf":1.0}}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"15":{"tf":1.0}}}}}}}}},"t":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":2,"docs":{"26":{"tf":1.0},"32":{"tf":1.0}}}}}}},"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":1,"docs":{"25":{"tf":1.0}}}},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":2,"docs":{"18":{"tf":1.0},"31":{"tf":1.0}},"i":{"df":2,"docs":{"28":{"tf":1.0},"30":{"tf":1.0}}}}}}}},"h":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"21":{"tf":1.0}}}}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"i":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{}}}}},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"29":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"1":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"n":{"df":2,"docs":{"26":{"tf":1.0},"32":{"tf":1.0}}}}}},"n":{"df":0,"docs":{},"e":{"df":1,"docs":{"12":{"tf":1.0}}}}}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":2,"docs":{"33":{"tf":1.0},"7":{"tf":1.0}}}}},"i":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}}},"s":{"a":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":1,"docs":{"17":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"z":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"1":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"c":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}}}}},"x":{"a":{"c":{"df":0,"docs":{},"t":{"df":3,"docs":{"18":{"tf":1.0},"25":{"tf":1.0},"6":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"27":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"25":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"f":{"a":{"c":{"df":0,"docs":{},"e":{"df":1,"docs":{"13":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"22":{"tf":1.0}}}}}},"n":{"df":2,"docs":{"8":{"tf":1.0},"9":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":1,"docs":{"19":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"o":{"a":{"df":0,"docs":{},"t":{"df":2,"docs":{"17":{"tf":1.0},"6":{"tf":1.0}}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{}}}}},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"27":{"tf":1.0}}}}}}}}}},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"28":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"m":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"4":{"tf":1.0}}}}}}}}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"9":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":1,"docs":{"17":{"tf":1.0}}},"r":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"14":{"tf":1.0}}}}}}}}},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}},"t":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"f":{"df":1,"docs":{"23":{"tf":1.0}}}}}}}},"j":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"34":{"tf":1.0}}}}}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":2,"docs":{"1":{"tf":1.0},"29":{"tf":1.0}}}}}},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"h":{"df":1,"docs":{"12":{"tf":1.0}}}}},"o":{"d":{"df":0,"docs":{},"e":{"df":1,"docs":{"22":{"tf":1.0}},"l":{"df":2,"docs":{"24":{"tf":1.0},"30":{"tf":1.0}}}}},"df":0,"docs":{}}},"n":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"26":{"tf":1.0},"32":{"tf":1.0}}}}},"df":0,"docs":{}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"34":{"tf":1.0}}}}}}}},"p":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"2":{"tf":1.0}}}}}}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"y":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":2,"docs":{"3":{"tf":1.0},"7":{"tf":1.0}}}}}}}}},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":1,"docs":{"17":{"tf":1.0}}}}}}}},"r":{"a":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":2,"docs":{"33":{"tf":1.0},"7":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"21":{"tf":1.0}}}}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"10":{"tf":1.0}}}}},"p":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"y":{"df":2,"docs":{"18":{"tf":1.0},"31":{"tf":1.0}}}},"df":0,"docs":{}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}}}},"u":{"df":0,"docs":{},"n":{"df":1,"docs":{"1":{"tf":1.0}}}}},"s":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":1,"docs":{"23":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"v":{"df":1,"docs":{"30":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"23":{"tf":1.0}}}}}}},"p":{"a":{"c":{"df":0,"docs":{},"e":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"c":{"df":1,"docs":{"8":{"tf":1.0}}},"df":0,"docs":{}}}}}},"t":{"a":{"df":0,"docs":{},"n":{"d":{"a":{"df":0,"docs":{},"r":{"d":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"y":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":3,"docs":{"14":{"tf":1.0},"3":{"tf":1.0},"33":{"tf":1.0}}}}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"5":{"tf":1.0}}}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"13":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":1,"docs":{"32":{"tf":1.0}},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"df":1,"docs":{"24":{"tf":1.0}}}}}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":1,"docs":{"20":{"tf":1.0}}}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":1,"docs":{"31":{"tf":1.0}}}}}}},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"w":{"df":1,"docs":{"6":{"tf":1.0}}}}}},"w":{"df":0,"docs":{},"i":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"5":{"tf":1.0}}}}},"df":0,"docs":{}}},"z":{"/":{"2":{"df":1,"docs":{"26":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":1,"docs":{"5":{"tf":1.0}}}}}}}}},"lang":"English","pipeline":["trimmer","stopWordFilter","stemmer"],"ref":"id","version":"0.9.5"},"results_options":{"limit_results":30,"teaser_word_count":30},"search_options":{"bool":"OR","expand":true,"fields":{"body":{"boost":1},"breadcrumbs":{"boost":1},"title":{"boost":2}}}}'));