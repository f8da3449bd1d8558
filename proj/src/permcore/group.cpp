#include "genrec/group.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include <json.hpp>

namespace genrec {

struct PermGroup::ChainCache {
    std::once_flag once;
    std::optional<StabilizerChain> chain;
};

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), cache_(std::make_shared<ChainCache>()) {
    if (degree < 1)
        raise(Errc::bad_params, "group degree must be >= 1");
    for (Permutation& g : generators) {
        if (g.degree() != degree)
            raise(Errc::degree_mismatch, "generator degree does not match group degree");
        if (g.is_identity()) continue;
        if (std::find(gens_.begin(), gens_.end(), g) == gens_.end())
            gens_.push_back(std::move(g));
    }
}

PermGroup PermGroup::trivial(int degree) { return PermGroup(degree, {}); }

std::vector<Permutation> PermGroup::generators_or_identity() const {
    if (!gens_.empty()) return gens_;
    return {Permutation::identity(degree_)};
}

const StabilizerChain& PermGroup::chain() const {
    std::call_once(cache_->once, [this] { cache_->chain = StabilizerChain::build(degree_, gens_); });
    return *cache_->chain;
}

StabilizerChain PermGroup::chain_with_base(const std::vector<int>& base_hint) const {
    return StabilizerChain::build(degree_, gens_, base_hint);
}

std::vector<int> PermGroup::orbit_set(int x) const {
    if (x < 0 || x >= degree_)
        raise(Errc::out_of_range, "orbit: point out of range");
    std::vector<int> orb{x};
    std::vector<char> seen(static_cast<std::size_t>(degree_), 0);
    seen[static_cast<std::size_t>(x)] = 1;
    for (std::size_t head = 0; head < orb.size(); ++head)
        for (const Permutation& s : gens_) {
            const int y = s(orb[head]);
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                orb.push_back(y);
            }
        }
    std::sort(orb.begin(), orb.end());
    return orb;
}

OrbitClass PermGroup::orbit(int x) const {
    OrbitClass oc;
    oc.representative = {x};
    oc.size = orbit_set(x).size();
    return oc;
}

std::vector<std::vector<int>> PermGroup::orbit_partition() const {
    std::vector<int> all(static_cast<std::size_t>(degree_));
    for (int i = 0; i < degree_; ++i) all[static_cast<std::size_t>(i)] = i;
    return orbit_partition_on(all);
}

std::vector<std::vector<int>> PermGroup::orbit_partition_on(const std::vector<int>& domain) const {
    std::vector<char> in_domain(static_cast<std::size_t>(degree_), 0);
    for (int p : domain) in_domain[static_cast<std::size_t>(p)] = 1;
    std::vector<char> seen(static_cast<std::size_t>(degree_), 0);
    std::vector<std::vector<int>> parts;
    for (int p : domain) {
        if (seen[static_cast<std::size_t>(p)]) continue;
        std::vector<int> orb{p};
        seen[static_cast<std::size_t>(p)] = 1;
        for (std::size_t head = 0; head < orb.size(); ++head)
            for (const Permutation& s : gens_) {
                const int y = s(orb[head]);
                if (!in_domain[static_cast<std::size_t>(y)])
                    raise(Errc::not_transitive, "domain is not invariant under the group");
                if (!seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    orb.push_back(y);
                }
            }
        std::sort(orb.begin(), orb.end());
        parts.push_back(std::move(orb));
    }
    return parts;
}

OrbitClass PermGroup::orbit_of_tuple(std::span<const int> tuple, int cap) const {
    if (static_cast<int>(tuple.size()) > cap)
        raise(Errc::bad_params, "tuple length exceeds cap");
    std::vector<int> hint;
    for (int p : tuple) {
        if (p < 0 || p >= degree_)
            raise(Errc::out_of_range, "tuple point out of range");
        if (std::find(hint.begin(), hint.end(), p) == hint.end()) hint.push_back(p);
    }
    const StabilizerChain ch = chain_with_base(hint);
    // |orbit of tuple| = |G| / |G_tuple|; the stabilizer is the chain tail
    // past the hint levels (hint points head the base by construction).
    std::uint64_t stab = ch.order_from_level(hint.size());
    OrbitClass oc;
    oc.representative.assign(tuple.begin(), tuple.end());
    oc.size = ch.order() / stab;
    return oc;
}

PermGroup PermGroup::pointwise_stabilizer(std::span<const int> pts) const {
    std::vector<int> hint;
    for (int p : pts) {
        if (p < 0 || p >= degree_)
            raise(Errc::out_of_range, "stabilizer point out of range");
        if (std::find(hint.begin(), hint.end(), p) != hint.end())
            raise(Errc::bad_params, "stabilizer points must be distinct");
        hint.push_back(p);
    }
    if (hint.empty()) return *this;
    const StabilizerChain ch = chain_with_base(hint);
    return PermGroup(degree_, ch.stabilizer_gens(hint.size()));
}

std::vector<int> PermGroup::fixed_points() const {
    std::vector<int> fixed;
    for (int p = 0; p < degree_; ++p) {
        bool ok = true;
        for (const Permutation& s : gens_)
            if (s(p) != p) { ok = false; break; }
        if (ok) fixed.push_back(p);
    }
    return fixed;
}

bool PermGroup::is_transitive() const {
    return static_cast<int>(orbit_set(0).size()) == degree_;
}

bool PermGroup::is_two_transitive() const {
    if (degree_ < 2 || !is_transitive()) return false;
    const PermGroup g0 = pointwise_stabilizer(std::array<int, 1>{0});
    return static_cast<int>(g0.orbit_set(1).size()) == degree_ - 1;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent[static_cast<std::size_t>(b)] = a;
        return true;
    }
};

} // namespace

std::vector<std::vector<std::vector<int>>>
PermGroup::minimal_block_systems(const std::vector<int>& domain) const {
    if (domain.size() < 2)
        raise(Errc::bad_params, "block systems need at least two points");
    const auto parts = orbit_partition_on(domain);  // also checks invariance
    if (parts.size() != 1)
        raise(Errc::not_transitive, "group is not transitive on the domain");

    const int x0 = *std::min_element(domain.begin(), domain.end());
    std::set<std::vector<std::vector<int>>> found;

    for (int y : domain) {
        if (y == x0) continue;
        // Minimal g-congruence merging x0 and y (union-find closure).
        UnionFind uf(degree_);
        uf.unite(x0, y);
        std::vector<std::pair<int, int>> queue{{x0, y}};
        while (!queue.empty()) {
            auto [a, b] = queue.back();
            queue.pop_back();
            for (const Permutation& s : gens_) {
                const int sa = s(a), sb = s(b);
                if (uf.unite(sa, sb)) queue.emplace_back(sa, sb);
            }
        }
        std::map<int, std::vector<int>> classes;
        for (int p : domain) classes[uf.find(p)].push_back(p);
        if (classes.size() <= 1) continue;  // one block: trivial
        bool any_big = false;
        std::vector<std::vector<int>> partition;
        for (auto& [root, cls] : classes) {
            if (cls.size() > 1) any_big = true;
            std::sort(cls.begin(), cls.end());
            partition.push_back(cls);
        }
        if (!any_big) continue;  // all singletons: trivial
        std::sort(partition.begin(), partition.end());
        found.insert(std::move(partition));
    }
    return {found.begin(), found.end()};
}

PermGroup PermGroup::centralizer_of(const PermGroup& h, std::uint64_t budget) const {
    if (h.degree() != degree_)
        raise(Errc::degree_mismatch, "centralizer: degree mismatch");
    if (order() > budget)
        raise(Errc::budget_exceeded, "centralizer: group order exceeds budget");

    // Keep only elements not generated by the commuting ones already kept;
    // the result still generates the full centralizer.
    std::vector<Permutation> kept;
    std::optional<StabilizerChain> kept_chain;
    chain().for_each_element(budget, [&](const Permutation& g) {
        for (const Permutation& s : h.gens_) {
            if (compose(g, s) != compose(s, g)) return true;
        }
        if (g.is_identity()) return true;
        if (kept_chain && kept_chain->contains(g)) return true;
        kept.push_back(g);
        kept_chain = StabilizerChain::build(degree_, kept);
        return true;
    });
    return PermGroup(degree_, std::move(kept));
}

bool PermGroup::is_abelian() const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        for (std::size_t j = i + 1; j < gens_.size(); ++j)
            if (compose(gens_[i], gens_[j]) != compose(gens_[j], gens_[i])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// group file I/O

PermGroup PermGroup::from_json(const std::string& text, std::string* name_out) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        raise(Errc::parse_error, std::string("group JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("degree") || !j.contains("generators"))
        raise(Errc::parse_error, "group JSON needs \"degree\" and \"generators\"");
    if (!j["degree"].is_number_integer())
        raise(Errc::parse_error, "\"degree\" must be an integer");
    const int degree = j["degree"].get<int>();
    if (!j["generators"].is_array())
        raise(Errc::parse_error, "\"generators\" must be an array of cycle strings");
    std::vector<Permutation> gens;
    for (const auto& item : j["generators"]) {
        if (!item.is_string())
            raise(Errc::parse_error, "generator entries must be strings");
        gens.push_back(Permutation::parse_cycles(item.get<std::string>(), degree));
    }
    if (name_out) *name_out = j.value("name", std::string{});
    return PermGroup(degree, std::move(gens));
}

PermGroup PermGroup::from_perms_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int degree = -1;
    std::vector<Permutation> gens;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c)) || !trimmed.empty()) trimmed += c;
        while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
            trimmed.pop_back();
        if (trimmed.empty() || trimmed[0] == '#') continue;
        if (degree < 0) {
            std::istringstream ls(trimmed);
            std::string word;
            ls >> word;
            if (word != "degree" || !(ls >> degree) || degree < 1)
                raise(Errc::parse_error,
                      "line " + std::to_string(lineno) + ": expected \"degree m\"");
            continue;
        }
        gens.push_back(Permutation::parse_cycles(trimmed, degree));
    }
    if (degree < 0)
        raise(Errc::parse_error, "missing \"degree m\" header line");
    return PermGroup(degree, std::move(gens));
}

PermGroup PermGroup::from_file(const std::string& path, std::string* name_out) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        raise(Errc::io_error, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && text[i] == '{') return from_json(text, name_out);
    if (name_out) *name_out = path;
    return from_perms_text(text);
}

std::string PermGroup::to_json(const std::string& name) const {
    nlohmann::json j;
    j["name"] = name;
    j["degree"] = degree_;
    nlohmann::json arr = nlohmann::json::array();
    for (const Permutation& g : generators_or_identity()) arr.push_back(g.to_cycles());
    j["generators"] = arr;
    return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------

Permutation induced_permutation(const Permutation& g, const std::vector<std::vector<int>>& sets) {
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < sets.size(); ++i) index[sets[i]] = static_cast<int>(i);
    std::vector<int> images(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
        std::vector<int> img;
        img.reserve(sets[i].size());
        for (int p : sets[i]) img.push_back(g(p));
        std::sort(img.begin(), img.end());
        auto it = index.find(img);
        if (it == index.end())
            raise(Errc::not_a_block_system, "image of a set is not a listed set");
        images[i] = it->second;
    }
    return Permutation(std::move(images));
}

PermGroup induced_action(const PermGroup& g, const std::vector<std::vector<int>>& sets) {
    if (sets.empty())
        raise(Errc::bad_params, "induced action needs at least one set");
    std::vector<Permutation> gens;
    gens.reserve(g.generators().size());
    for (const Permutation& s : g.generators()) gens.push_back(induced_permutation(s, sets));
    return PermGroup(static_cast<int>(sets.size()), std::move(gens));
}

} // namespace genrec
