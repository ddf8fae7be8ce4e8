#include "xiknot/pipeline.hpp"

#include "xiknot/coloring.hpp"
#include "xiknot/diagram.hpp"
#include "xiknot/linking.hpp"
#include "xiknot/signatures.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

namespace xiknot {

using nlohmann::json;

std::string BasisDiff::label() const {
    return curve + "^" + std::to_string(j) + "-" + curve + "^" + std::to_string(k);
}

std::vector<BasisDiff> basis_lifts(const std::vector<LoopMonodromy>& loops,
                                   const std::string& boundary_name,
                                   const BoundaryMonodromy& boundary, int c0, int genus) {
    if (c0 < 1 || c0 > 3) throw ProblemError("base color must be 1, 2, or 3");
    if (static_cast<int>(loops.size()) != 2 * genus - 2)
        throw ProblemError("a genus-" + std::to_string(genus) + " surface needs " +
                           std::to_string(2 * genus - 2) + " loop curves, got " +
                           std::to_string(loops.size()));
    std::vector<BasisDiff> out;
    for (const auto& l : loops) {
        const int fixed = l.mu.apply(c0);
        BasisDiff d;
        d.curve = l.name;
        d.j = fixed == 1 ? 2 : 1;
        d.k = fixed == 3 ? 2 : 3;
        out.push_back(d);
    }
    const int j = boundary.right.apply(c0);
    const int l = boundary.left.apply(c0);
    if (j == l)
        throw ProblemError("the two boundary anchor walks name the same lift of '" +
                           boundary_name + "'; they must land in distinct sheets");
    out.push_back({boundary_name, j, 6 - j - l});
    return out;
}

namespace {

// The knot's self-crossing underpass list: shared branch data that every
// scene of one problem must agree on.
std::vector<std::array<int, 2>> knot_self_lists(const Diagram& d) {
    CurveLists l = curve_lists(d, d.knot);
    std::vector<std::array<int, 2>> out;
    for (size_t i = 0; i < l.f.size(); ++i)
        if (l.t[i] == 'k') out.push_back({l.f[i], l.eps[i]});
    return out;
}

int find_component(const Scene& s, const std::string& name) {
    for (size_t i = 0; i < s.components.size(); ++i)
        if (s.components[i].name == name) return static_cast<int>(i);
    return -1;
}

int find_pushoff(const Scene& s, const std::string& of) {
    for (size_t i = 0; i < s.components.size(); ++i)
        if (s.components[i].role == Role::Trace && s.components[i].pushoff_of == of)
            return static_cast<int>(i);
    return -1;
}

}  // namespace

ComputedBlockProvider::ComputedBlockProvider(const std::vector<Scene>& scenes) {
    if (scenes.empty()) throw ProblemError("computed blocks need at least one scene");
    for (const auto& s : scenes)
        covers_.push_back(std::make_unique<CoverComplex>(LevelComplex(build_diagram(s))));
    const Diagram& first = covers_.front()->base().diagram();
    for (size_t i = 1; i < covers_.size(); ++i) {
        const Diagram& d = covers_[i]->base().diagram();
        if (knot_self_lists(d) != knot_self_lists(first) || d.scene.colors != first.scene.colors)
            throw ProblemError("scene '" + d.scene.name +
                               "' disagrees with '" + first.scene.name +
                               "' on the branch curve's self-crossing lists or colors");
    }
}

std::optional<std::vector<Int>> ComputedBlockProvider::h1() const {
    std::vector<Int> f = covers_.front()->h1_factors();
    for (size_t i = 1; i < covers_.size(); ++i)
        if (covers_[i]->h1_factors() != f)
            throw ProblemError("scenes disagree on the cover's first homology");
    return f;
}

Mat<Rat> ComputedBlockProvider::block(const std::string& g, const std::string& h) {
    const auto key = std::make_pair(g, h);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    for (const auto& cov : covers_) {
        const Diagram& d = cov->base().diagram();
        const int ig = find_component(d.scene, g);
        const int ih = find_component(d.scene, h);
        const int itr = find_pushoff(d.scene, h);
        if (ig < 0 || ih < 0 || itr < 0) continue;
        if (d.scene.components[static_cast<size_t>(ig)].role != Role::Basis ||
            d.scene.components[static_cast<size_t>(ih)].role != Role::Basis)
            throw ProblemError("curves '" + g + "' and '" + h + "' must have the basis role");
        if (anchor_monodromy(d, itr) != anchor_monodromy(d, ih))
            throw ProblemError("the push-off of '" + h +
                               "' carries an anchor walk that disagrees with the curve's own; "
                               "lift labels would not match");
        Mat<Rat> b = linking_block(*cov, ig, itr);
        cache_.emplace(key, b);
        return b;
    }
    throw ProblemError("no scene provides curve '" + g + "' together with a push-off of '" + h + "'");
}

namespace {

Rat rat_entry(const json& v, const std::string& what) {
    if (v.is_number_integer()) return Rat(v.get<long long>());
    if (v.is_string()) {
        try {
            return Rat(v.get<std::string>());
        } catch (const std::exception&) {
            throw ProblemError(what + ": cannot parse rational '" + v.get<std::string>() + "'");
        }
    }
    throw ProblemError(what + " entries must be integers or \"a/b\" strings");
}

Mat<Rat> rat_matrix_3x3(const json& v, const std::string& what) {
    if (!v.is_array() || v.size() != 3) throw ProblemError(what + " must be a 3x3 matrix");
    Mat<Rat> m(3, 3);
    for (int i = 0; i < 3; ++i) {
        const json& row = v[static_cast<size_t>(i)];
        if (!row.is_array() || row.size() != 3) throw ProblemError(what + " must be a 3x3 matrix");
        for (int j = 0; j < 3; ++j) m(i, j) = rat_entry(row[static_cast<size_t>(j)], what);
    }
    return m;
}

}  // namespace

TableBlockProvider TableBlockProvider::parse_text(const std::string& json_text,
                                                  const std::string& origin) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ProblemError("block table is not valid JSON: " + std::string(e.what()));
    }
    if (!j.is_object() || !j.contains("blocks") || !j["blocks"].is_object())
        throw ProblemError("block table needs a 'blocks' object");

    TableBlockProvider t;
    t.origin_ = origin;
    for (const auto& [key, val] : j["blocks"].items()) {
        const size_t bar = key.find('|');
        if (bar == std::string::npos || key.back() != '+' || bar == 0 || bar + 2 >= key.size())
            throw ProblemError("block key '" + key + "' must look like 'g|h+'");
        Mat<Rat> m = rat_matrix_3x3(val, "block '" + key + "'");
        Rat sum0 = m(0, 0) + m(0, 1) + m(0, 2);
        for (int i = 1; i < 3; ++i)
            if (m(i, 0) + m(i, 1) + m(i, 2) != sum0)
                throw ProblemError("block '" + key +
                                   "' has unequal row sums; every row must project to the same "
                                   "classical linking number");
        const std::string g = key.substr(0, bar);
        const std::string h = key.substr(bar + 1, key.size() - bar - 2);
        if (g == h && m != m.transpose())
            throw ProblemError("block '" + key + "' pairs a curve with its own push-off and must be symmetric");
        t.blocks_[key] = std::move(m);
    }
    return t;
}

TableBlockProvider TableBlockProvider::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ProblemError("cannot open block table '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str(), "table:" + path);
}

Mat<Rat> TableBlockProvider::block(const std::string& g, const std::string& h) {
    const std::string key = g + "|" + h + "+";
    auto it = blocks_.find(key);
    if (it == blocks_.end())
        throw ProblemError("block table '" + origin_ + "' has no entry '" + key + "'");
    return it->second;
}

std::vector<std::string> TableBlockProvider::keys() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : blocks_) out.push_back(k);
    return out;
}

Mat<Rat> assemble_M(BlockProvider& blocks, const std::vector<BasisDiff>& basis) {
    const int n = static_cast<int>(basis.size());
    Mat<Rat> m(n, n);
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
            const BasisDiff& br = basis[static_cast<size_t>(r)];
            const BasisDiff& bs = basis[static_cast<size_t>(s)];
            const Mat<Rat> p = blocks.block(br.curve, bs.curve);
            const Mat<Rat> q = blocks.block(bs.curve, br.curve);
            if (p.r != 3 || p.c != 3 || q.r != 3 || q.c != 3)
                throw ProblemError("lift blocks must be 3x3");
            // lk(A_r - B_r, A_s^+ - B_s^-) with A_r = r^j, B_r = r^k; the two
            // negative-push-off terms are read from the reversed block via
            // lk(X, Z^-) = lk(Z, X^+).
            m(r, s) = p(br.j - 1, bs.j - 1) - q(bs.k - 1, br.j - 1) -
                      p(br.k - 1, bs.j - 1) + q(bs.k - 1, br.k - 1);
        }
    return m;
}

int sigma_w(const Mat<Rat>& m) {
    if (m.r != m.c) throw ProblemError("pairing matrix must be square");
    Mat<Rat> sym = (m + m.transpose()) * Rat(1, 2);
    return -signature_sym(sym);
}

Rat cover_signature(int p, const Int& sigma_x, const Int& e_b, const Rat& xi) {
    return Rat(p) * Rat(sigma_x) - Rat(Int(p - 1) * e_b, Int(4)) - xi;
}

bool xi_obstructs(const Rat& xi, int p) {
    const Rat a = xi < 0 ? -xi : xi;
    return 2 * a > p - 1;
}

std::string ribbon_verdict(const Rat& xi, int p) {
    return xi_obstructs(xi, p) ? "obstructed" : "not obstructed by xi";
}

namespace {

Perm3 perm_from_images(const std::vector<int>& img, const std::string& what) {
    if (img.size() != 3) throw ProblemError(what + " must list the images of 1, 2, 3");
    Perm3 m;
    std::array<bool, 3> seen{};
    for (int i = 0; i < 3; ++i) {
        const int v = img[static_cast<size_t>(i)];
        if (v < 1 || v > 3 || seen[static_cast<size_t>(v - 1)])
            throw ProblemError(what + " is not a permutation of {1,2,3}");
        seen[static_cast<size_t>(v - 1)] = true;
        m.img[static_cast<size_t>(i)] = v;
    }
    return m;
}

std::vector<int> int_list(const json& v, const std::string& what) {
    if (!v.is_array()) throw ProblemError(what + " must be an array");
    std::vector<int> out;
    for (const auto& x : v) {
        if (!x.is_number_integer()) throw ProblemError(what + " entries must be integers");
        out.push_back(x.get<int>());
    }
    return out;
}

Mat<Int> int_matrix(const json& v, const std::string& what) {
    if (!v.is_array()) throw ProblemError(what + " must be an array of rows");
    const int r = static_cast<int>(v.size());
    if (r == 0) return Mat<Int>(0, 0);
    const int c = static_cast<int>(v[0].size());
    Mat<Int> m(r, c);
    for (int i = 0; i < r; ++i) {
        const json& row = v[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != c)
            throw ProblemError(what + " rows must all have the same length");
        for (int j = 0; j < c; ++j) {
            const json& x = row[static_cast<size_t>(j)];
            if (!x.is_number_integer()) throw ProblemError(what + " entries must be integers");
            m(i, j) = Int(x.get<long long>());
        }
    }
    return m;
}

std::string join_path(const std::string& base, const std::string& rel) {
    if (rel.empty() || rel.front() == '/') return rel;
    if (base.empty()) return rel;
    return base.back() == '/' ? base + rel : base + "/" + rel;
}

}  // namespace

ProblemInput parse_problem_text(const std::string& json_text, const std::string& base_dir) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ProblemError("problem file is not valid JSON: " + std::string(e.what()));
    }
    if (!j.is_object()) throw ProblemError("problem file must be a JSON object");

    ProblemInput in;
    in.name = j.value("name", std::string("problem"));
    in.p = j.value("p", 3);

    if (j.contains("scenes")) {
        if (!j["scenes"].is_array()) throw ProblemError("'scenes' must list scene file paths");
        for (const auto& s : j["scenes"])
            in.scenes.push_back(load_scene_file(join_path(base_dir, s.get<std::string>())));
    }
    if (j.contains("table")) in.table_path = join_path(base_dir, j["table"].get<std::string>());

    if (!j.contains("surface") || !j["surface"].is_object())
        throw ProblemError("problem file needs a 'surface' object");
    const json& surf = j["surface"];
    in.surface.a = int_matrix(surf.at("seifert_matrix"), "surface seifert_matrix");
    if (surf.contains("basis_names"))
        for (const auto& n : surf["basis_names"]) in.surface.basis.push_back(n.get<std::string>());

    if (!j.contains("characteristic") || !j["characteristic"].is_object())
        throw ProblemError("problem file needs a 'characteristic' object");
    const json& ch = j["characteristic"];
    in.characteristic.name = ch.at("name").get<std::string>();
    for (int v : int_list(ch.at("vector"), "characteristic vector"))
        in.characteristic.vec.push_back(Int(v));
    if (ch.contains("seifert_matrix"))
        in.characteristic.seifert.a = int_matrix(ch["seifert_matrix"], "characteristic seifert_matrix");

    if (!j.contains("basis_order") || !j["basis_order"].is_array() || j["basis_order"].empty())
        throw ProblemError("problem file needs a nonempty 'basis_order' list of curve names");
    for (const auto& n : j["basis_order"]) in.basis_order.push_back(n.get<std::string>());

    if (j.contains("monodromies")) {
        const json& mono = j["monodromies"];
        if (!mono.is_object()) throw ProblemError("'monodromies' must map curve names to images");
        for (const auto& [name, val] : mono.items()) {
            if (val.is_object()) {
                BoundaryMonodromy b;
                b.right = perm_from_images(int_list(val.at("right"), "right monodromy of " + name),
                                           "right monodromy of " + name);
                b.left = perm_from_images(int_list(val.at("left"), "left monodromy of " + name),
                                          "left monodromy of " + name);
                if (name != in.characteristic.name)
                    throw ProblemError("only the characteristic curve takes a right/left monodromy pair");
                in.boundary_monodromy = b;
            } else {
                in.loop_monodromies[name] =
                    perm_from_images(int_list(val, "monodromy of " + name), "monodromy of " + name);
            }
        }
    }
    if (j.contains("c0")) in.c0 = j["c0"].get<int>();
    return in;
}

ProblemInput load_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ProblemError("cannot open problem file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    const size_t slash = path.find_last_of('/');
    return parse_problem_text(ss.str(), slash == std::string::npos ? "" : path.substr(0, slash));
}

namespace {

// Walk-based monodromies where a scene holds the curve, explicit entries
// otherwise.
struct ResolvedMonodromies {
    std::vector<LoopMonodromy> loops;
    BoundaryMonodromy boundary;
    std::vector<std::pair<std::string, Perm3>> display;
};

ResolvedMonodromies resolve_monodromies(const ProblemInput& in, const std::vector<Diagram>& diags) {
    if (in.basis_order.back() != in.characteristic.name)
        throw ProblemError("the characteristic curve '" + in.characteristic.name +
                           "' must come last in basis_order");
    ResolvedMonodromies r;
    for (size_t i = 0; i + 1 < in.basis_order.size(); ++i) {
        const std::string& name = in.basis_order[i];
        bool found = false;
        for (const Diagram& d : diags) {
            const int c = find_component(d.scene, name);
            if (c < 0) continue;
            const AnchorSet& a = d.scene.components[static_cast<size_t>(c)].anchors;
            if (a.boundary)
                throw ProblemError("loop curve '" + name + "' carries a boundary anchor pair");
            r.loops.push_back({name, arc_walk_monodromy(d, a.path)});
            found = true;
            break;
        }
        if (!found) {
            auto it = in.loop_monodromies.find(name);
            if (it == in.loop_monodromies.end())
                throw ProblemError("no scene or explicit monodromy for curve '" + name + "'");
            r.loops.push_back({name, it->second});
        }
        r.display.emplace_back(name, r.loops.back().mu);
    }

    const std::string& bname = in.characteristic.name;
    bool found = false;
    for (const Diagram& d : diags) {
        const int c = find_component(d.scene, bname);
        if (c < 0) continue;
        const AnchorSet& a = d.scene.components[static_cast<size_t>(c)].anchors;
        if (!a.boundary)
            throw ProblemError("characteristic curve '" + bname +
                               "' needs a right/left anchor pair in its scene");
        r.boundary.right = arc_walk_monodromy(d, a.right);
        r.boundary.left = arc_walk_monodromy(d, a.left);
        found = true;
        break;
    }
    if (!found) {
        if (!in.boundary_monodromy)
            throw ProblemError("no scene or explicit monodromy pair for curve '" + bname + "'");
        r.boundary = *in.boundary_monodromy;
    }
    r.display.emplace_back(bname + ".right", r.boundary.right);
    r.display.emplace_back(bname + ".left", r.boundary.left);
    return r;
}

}  // namespace

XiReport compute_xi(const ProblemInput& in, BlockProvider& blocks) {
    if (in.p != 3) throw ProblemError("the lift machinery is built for p = 3");

    XiReport rep;
    rep.name = in.name;
    rep.p = in.p;
    rep.provider = blocks.origin();

    validate_seifert(in.surface);
    const Mat<Int> l = symmetrize(in.surface);
    if (static_cast<int>(in.characteristic.vec.size()) != l.r)
        throw ProblemError("characteristic vector length must match the surface basis");
    if (!verify_characteristic(l, in.characteristic.vec, in.p))
        throw ProblemError("characteristic vector fails its defining congruence mod " +
                           std::to_string(in.p));
    rep.term_form = Rat(in.p * in.p - 1, 6 * in.p) * Rat(self_pairing(l, in.characteristic.vec));

    validate_seifert(in.characteristic.seifert);
    int twist = 0;
    for (int s : twisted_signatures(in.characteristic.seifert.a, in.p)) twist += s;
    rep.term_twist = Rat(twist);

    if (auto factors = blocks.h1()) {
        rep.h1_known = true;
        rep.h1 = *factors;
        for (const Int& f : rep.h1)
            if (f == 0)
                throw ProblemError("the cover has infinite first homology; "
                                   "linking numbers of lifts are not defined");
    } else {
        rep.warnings.push_back("cover homology not computed by this block source; "
                               "finite first homology is assumed");
    }

    std::vector<Diagram> diags;
    for (const Scene& s : in.scenes) diags.push_back(build_diagram(s));
    if (!diags.empty()) {
        if (!diags.front().has_colors()) throw ProblemError("scene carries no coloring");
        rep.c0 = diags.front().color_of_knot_arc(0);
        if (in.c0 && *in.c0 != rep.c0)
            throw ProblemError("explicit c0 disagrees with the scene coloring");
    } else {
        if (!in.c0) throw ProblemError("c0 is required when no scene is given");
        rep.c0 = *in.c0;
    }

    const ResolvedMonodromies mono = resolve_monodromies(in, diags);
    rep.monodromies = mono.display;
    rep.basis = basis_lifts(mono.loops, in.characteristic.name, mono.boundary, rep.c0,
                            in.surface.genus());

    rep.m = assemble_M(blocks, rep.basis);
    if (rep.m != rep.m.transpose())
        rep.warnings.push_back("pairing matrix is not symmetric; "
                               "its symmetric part is used for the signature");
    if (rep.h1_known && rep.h1.empty()) {
        for (const Rat& x : rep.m.a)
            if (!is_integer(x)) {
                rep.warnings.push_back("pairing matrix has non-integer entries "
                                       "despite trivial cover homology");
                break;
            }
    }
    rep.sigma_m = signature_sym((rep.m + rep.m.transpose()) * Rat(1, 2));
    rep.sigma_w = -rep.sigma_m;

    rep.xi = rep.term_form + rep.term_twist + rep.sigma_w;
    rep.xi_integral = is_integer(rep.xi);
    if (!rep.xi_integral)
        rep.warnings.push_back("xi is not an integer; the input data is likely inconsistent");
    rep.verdict = ribbon_verdict(rep.xi, rep.p);
    return rep;
}

XiReport compute_xi(const ProblemInput& in) {
    if (!in.scenes.empty()) {
        ComputedBlockProvider prov(in.scenes);
        return compute_xi(in, prov);
    }
    if (in.table_path) {
        TableBlockProvider prov = TableBlockProvider::load_file(*in.table_path);
        return compute_xi(in, prov);
    }
    throw ProblemError("problem supplies neither scenes nor a block table");
}

std::string report_json(const XiReport& r) {
    json j;
    j["name"] = r.name;
    j["p"] = r.p;
    j["provider"] = r.provider;
    j["c0"] = r.c0;
    j["h1"]["known"] = r.h1_known;
    j["h1"]["factors"] = json::array();
    for (const Int& f : r.h1) j["h1"]["factors"].push_back(to_string(f));
    j["monodromies"] = json::object();
    for (const auto& [name, mu] : r.monodromies)
        j["monodromies"][name] = std::vector<int>{mu.img[0], mu.img[1], mu.img[2]};
    j["basis"] = json::array();
    for (const BasisDiff& b : r.basis) j["basis"].push_back(b.label());
    j["m"] = json::array();
    for (int i = 0; i < r.m.r; ++i) {
        json row = json::array();
        for (int k = 0; k < r.m.c; ++k) row.push_back(to_string(r.m(i, k)));
        j["m"].push_back(row);
    }
    j["sigma_m"] = r.sigma_m;
    j["terms"]["surface_form"] = to_string(r.term_form);
    j["terms"]["twisted_sum"] = to_string(r.term_twist);
    j["terms"]["sigma_w"] = r.sigma_w;
    j["xi"] = to_string(r.xi);
    j["xi_integral"] = r.xi_integral;
    j["verdict"] = r.verdict;
    j["warnings"] = r.warnings;
    return j.dump(2) + "\n";
}

std::string report_summary(const XiReport& r) {
    std::ostringstream out;
    out << r.name << ": xi = " << to_string(r.xi) << "   (p = " << r.p << ", " << r.verdict << ")\n";
    out << "  blocks: " << r.provider << "\n";
    if (r.h1_known) {
        out << "  cover first homology: ";
        if (r.h1.empty())
            out << "trivial";
        else
            for (size_t i = 0; i < r.h1.size(); ++i) out << (i ? ", " : "") << to_string(r.h1[i]);
        out << "\n";
    } else {
        out << "  cover first homology: not computed (assumed finite)\n";
    }
    out << "  monodromies:";
    for (const auto& [name, mu] : r.monodromies) out << " " << name << " = " << mu.cycle_string();
    out << "\n  basis:";
    for (const BasisDiff& b : r.basis) out << " " << b.label();
    out << "\n  pairing matrix:\n";
    for (int i = 0; i < r.m.r; ++i) {
        out << "    [";
        for (int k = 0; k < r.m.c; ++k) out << (k ? " " : "") << to_string(r.m(i, k));
        out << "]\n";
    }
    out << "  sigma(m) = " << r.sigma_m << "\n";
    out << "  xi = " << to_string(r.term_form) << " + " << to_string(r.term_twist) << " + "
        << r.sigma_w << " = " << to_string(r.xi) << "\n";
    for (const std::string& w : r.warnings) out << "  warning: " << w << "\n";
    return out.str();
}

}  // namespace xiknot
