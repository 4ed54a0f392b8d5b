#include "modec/reduce.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <random>
#include <unordered_map>

#include <openssl/evp.h>

#include "modec/errors.hpp"

namespace modec {

std::string to_string(Rule r) { return r == Rule::Seq ? "seq" : "par"; }

HashValue signature_basis(VertexId v) {
    static constexpr char kSeed[] = "modec.signature.v1";
    unsigned char input[sizeof(kSeed) - 1 + 8];
    std::memcpy(input, kSeed, sizeof(kSeed) - 1);
    for (int i = 0; i < 8; ++i)
        input[sizeof(kSeed) - 1 + i] = static_cast<unsigned char>((std::uint64_t{v} >> (8 * i)) & 0xff);
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int digest_len = 0;
    if (EVP_Digest(input, sizeof(input), digest, &digest_len, EVP_sha256(), nullptr) != 1 ||
        digest_len < 16)
        throw Error("signature hashing failed");
    HashValue h;
    for (int i = 0; i < 8; ++i) {
        h.hi = (h.hi << 8) | digest[i];
        h.lo = (h.lo << 8) | digest[8 + i];
    }
    return h;
}

bool seq_applicable(const Digraph& g, VertexId a, VertexId b) {
    if (a >= g.vertex_count() || b >= g.vertex_count() || a == b) return false;
    auto sa = g.successors(a);
    if (sa.size() != 1 || sa[0] != b) return false;
    bool found_a = false;
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
        if (!g.has_edge(x, b)) continue;
        if (x != a) return false;
        found_a = true;
    }
    return found_a;
}

bool par_applicable(const Digraph& g, VertexId a, VertexId b) {
    if (a >= g.vertex_count() || b >= g.vertex_count() || a == b) return false;
    auto sa = g.successors(a);
    auto sb = g.successors(b);
    if (!std::equal(sa.begin(), sa.end(), sb.begin(), sb.end())) return false;
    for (VertexId x = 0; x < g.vertex_count(); ++x)
        if (g.has_edge(x, a) != g.has_edge(x, b)) return false;
    return true;
}

namespace {

struct SignatureHash {
    std::size_t operator()(const Signature& s) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (std::uint64_t x : {s.pred_sig.hi, s.pred_sig.lo, s.succ_sig.hi, s.succ_sig.lo}) {
            h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

struct Candidate {
    Rule rule;
    VertexId a, b;
};

// Mutable reduction state over working super-vertex ids. Initial vertices
// keep their input ids; each merge appends a fresh id.
class Engine {
public:
    Engine(const Digraph& g, const ReduceOptions& options)
        : input_(g), options_(options) {
        const std::size_t n = g.vertex_count();
        succ_.resize(n);
        pred_.resize(n);
        for (VertexId v = 0; v < n; ++v) {
            auto s = g.successors(v);
            succ_[v].assign(s.begin(), s.end());
        }
        auto preds = g.predecessor_lists();
        for (VertexId v = 0; v < n; ++v) pred_[v] = std::move(preds[v]);
        alive_.assign(n, true);
        for (VertexId v = 0; v < n; ++v) {
            basis_.push_back(basis_for(v));
            fragments_.push_back(MDTree::leaf(v, g.labels()));
        }
        sig_.resize(n);
        for (VertexId v = 0; v < n; ++v) sig_[v] = compute_signature(v);
        for (VertexId v = 0; v < n; ++v) {
            if (succ_[v].size() == 1) enqueue({Rule::Seq, v, succ_[v][0]});
        }
        for (VertexId v = 0; v < n; ++v) {
            for (VertexId y : bucket_members(v)) enqueue({Rule::Par, y, v});
            buckets_[sig_[v]].push_back(v);
        }
    }

    Kernel run() {
        std::mt19937_64 rng(options_.shuffle_seed.value_or(0));
        while (!queue_.empty()) {
            Candidate c;
            if (options_.shuffle_seed) {
                std::uniform_int_distribution<std::size_t> pick(0, queue_.size() - 1);
                std::size_t i = pick(rng);
                c = queue_[i];
                queue_[i] = queue_.back();
                queue_.pop_back();
            } else {
                c = queue_.front();
                queue_.pop_front();
            }
            if (!alive(c.a) || !alive(c.b)) continue;
            if (c.rule == Rule::Seq ? !seq_now(c.a, c.b) : !par_now(c.a, c.b)) continue;
            if (options_.check_exclusivity) assert_exclusivity();
            merge(c);
        }
        return finish();
    }

private:
    HashValue basis_for(VertexId v) const {
        if (v < options_.basis_override.size()) return options_.basis_override[v];
        return signature_basis(v);
    }

    bool alive(VertexId v) const { return v < alive_.size() && alive_[v]; }

    bool seq_now(VertexId a, VertexId b) const {
        return succ_[a].size() == 1 && succ_[a][0] == b && pred_[b].size() == 1 &&
               pred_[b][0] == a;
    }

    bool par_now(VertexId a, VertexId b) const {
        return a != b && sig_[a] == sig_[b] && succ_[a] == succ_[b] && pred_[a] == pred_[b];
    }

    Signature compute_signature(VertexId v) const {
        Signature s;
        for (VertexId p : pred_[v]) s.pred_sig = s.pred_sig ^ basis_[p];
        for (VertexId w : succ_[v]) s.succ_sig = s.succ_sig ^ basis_[w];
        return s;
    }

    // Alive vertices currently filed under the same signature as v.
    std::vector<VertexId> bucket_members(VertexId v) const {
        std::vector<VertexId> out;
        auto it = buckets_.find(sig_[v]);
        if (it == buckets_.end()) return out;
        for (VertexId y : it->second)
            if (y != v && alive(y) && sig_[y] == sig_[v]) out.push_back(y);
        return out;
    }

    void enqueue(Candidate c) { queue_.push_back(c); }

    static void remove_value(std::vector<VertexId>& xs, VertexId v) {
        auto it = std::lower_bound(xs.begin(), xs.end(), v);
        if (it != xs.end() && *it == v) xs.erase(it);
    }

    static void insert_value(std::vector<VertexId>& xs, VertexId v) {
        auto it = std::lower_bound(xs.begin(), xs.end(), v);
        if (it == xs.end() || *it != v) xs.insert(it, v);
    }

    void merge(const Candidate& c) {
        const VertexId a = c.a, b = c.b;
        const VertexId m = static_cast<VertexId>(succ_.size());

        MergeStep step;
        step.rule = c.rule;
        step.a = a;
        step.b = b;
        step.merged = m;
        step.a_vertices = fragments_[a].node(0).vertex_set;
        step.b_vertices = fragments_[b].node(0).vertex_set;
        log_.push_back(std::move(step));

        std::vector<VertexId> mpred, msucc;
        if (c.rule == Rule::Seq) {
            mpred = pred_[a];
            remove_value(mpred, b);
            msucc = succ_[b];
            remove_value(msucc, a);
            fragments_.push_back(compose(NodeKind::Ordered, {fragments_[a], fragments_[b]},
                                         input_.labels()));
        } else {
            mpred = pred_[a];
            msucc = succ_[a];
            fragments_.push_back(compose(NodeKind::Parallel, {fragments_[a], fragments_[b]},
                                         input_.labels()));
        }
        alive_[a] = alive_[b] = false;
        alive_.push_back(true);
        basis_.push_back(basis_for(m));
        succ_.push_back(msucc);
        pred_.push_back(mpred);
        sig_.emplace_back();

        for (VertexId x : pred_[m]) {
            remove_value(succ_[x], a);
            remove_value(succ_[x], b);
            insert_value(succ_[x], m);
        }
        for (VertexId x : succ_[m]) {
            remove_value(pred_[x], a);
            remove_value(pred_[x], b);
            insert_value(pred_[x], m);
        }

        std::vector<VertexId> affected{m};
        affected.insert(affected.end(), pred_[m].begin(), pred_[m].end());
        affected.insert(affected.end(), succ_[m].begin(), succ_[m].end());
        for (VertexId x : affected) {
            sig_[x] = compute_signature(x);
            buckets_[sig_[x]].push_back(x);
        }
        for (VertexId x : affected) {
            if (succ_[x].size() == 1) enqueue({Rule::Seq, x, succ_[x][0]});
            if (pred_[x].size() == 1) enqueue({Rule::Seq, pred_[x][0], x});
            for (VertexId y : bucket_members(x)) enqueue({Rule::Par, x, y});
        }
    }

    void assert_exclusivity() const {
        for (VertexId x = 0; x < succ_.size(); ++x) {
            if (!alive(x)) continue;
            bool in_seq = (succ_[x].size() == 1 && seq_now(x, succ_[x][0])) ||
                          (pred_[x].size() == 1 && seq_now(pred_[x][0], x));
            if (!in_seq) continue;
            for (VertexId y = 0; y < succ_.size(); ++y)
                if (y != x && alive(y) && par_now(x, y))
                    throw Error("flow rule exclusivity violated at vertex " + std::to_string(x));
        }
    }

    Kernel finish() {
        std::vector<VertexId> kernel_ids;
        for (VertexId v = 0; v < alive_.size(); ++v)
            if (alive_[v]) kernel_ids.push_back(v);
        std::vector<VertexId> to_kernel(alive_.size(), 0);
        for (std::size_t i = 0; i < kernel_ids.size(); ++i)
            to_kernel[kernel_ids[i]] = static_cast<VertexId>(i);

        std::vector<Edge> edges;
        std::vector<std::string> labels;
        std::vector<MDTree> frags;
        for (VertexId v : kernel_ids) {
            for (VertexId w : succ_[v]) edges.push_back({to_kernel[v], to_kernel[w]});
            std::string joined;
            for (VertexId original : fragments_[v].node(0).vertex_set) {
                if (!joined.empty()) joined += '+';
                joined += input_.label(original);
            }
            labels.push_back(std::move(joined));
            frags.push_back(std::move(fragments_[v]));
        }
        Kernel k{Digraph(kernel_ids.size(), std::move(edges), std::move(labels)),
                 std::move(frags), std::move(log_)};
        return k;
    }

    const Digraph& input_;
    const ReduceOptions& options_;
    std::vector<std::vector<VertexId>> succ_, pred_;
    std::vector<bool> alive_;
    std::vector<HashValue> basis_;
    std::vector<Signature> sig_;
    std::vector<MDTree> fragments_;
    std::unordered_map<Signature, std::vector<VertexId>, SignatureHash> buckets_;
    std::deque<Candidate> queue_;
    std::vector<MergeStep> log_;
};

}  // namespace

Kernel reduce(const Digraph& g) { return reduce(g, ReduceOptions{}); }

Kernel reduce(const Digraph& g, const ReduceOptions& options) {
    return Engine(g, options).run();
}

MDTree decompose_via_reduction(const Digraph& g, bool pre_reduce) {
    if (g.vertex_count() == 0) throw Error("cannot decompose an empty graph");
    auto [contracted, partition] = scc_contract(g);
    Digraph work = pre_reduce ? transitive_reduction(contracted) : contracted;
    Kernel kernel = reduce(work);
    Digraph kernel_closure = transitive_closure(kernel.graph);
    MDTree skeleton = decompose_transitive_dag(kernel_closure);
    MDTree over_blocks = substitute_leaves(skeleton, kernel.fragments, contracted.labels());

    std::vector<MDTree> expansion;
    expansion.reserve(partition.blocks.size());
    for (const auto& block : partition.blocks) {
        if (block.size() == 1) {
            expansion.push_back(MDTree::leaf(block.front(), g.labels()));
            continue;
        }
        std::vector<MDNode> nodes(1 + block.size());
        nodes[0].kind = NodeKind::Series;
        for (std::uint32_t i = 0; i < block.size(); ++i) {
            nodes[1 + i].kind = NodeKind::Leaf;
            nodes[1 + i].vertex = block[i];
            nodes[0].children.push_back(1 + i);
        }
        expansion.push_back(MDTree::build(std::move(nodes), 0, g.labels()));
    }
    return prune(substitute_leaves(over_blocks, expansion, g.labels()));
}

}  // namespace modec
