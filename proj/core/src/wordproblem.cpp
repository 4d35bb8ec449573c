// wordproblem.cpp -- inverse-image automata and the two word-problem deciders.
#include "thmon/wordproblem.hpp"

#include <algorithm>
#include <deque>
#include <future>
#include <map>
#include <numeric>
#include <thread>
#include <unordered_map>

#include <json.hpp>

#include "thmon/errors.hpp"

namespace thmon {

namespace {

// Partial DFA with any number of accept states; the working representation
// behind AcyclicDfa and the automata for domain ideals (which have cycles).
struct Automaton {
    int k = 2;
    int start = -1;
    std::vector<int> delta;
    std::vector<char> accept;

    int size() const { return static_cast<int>(accept.size()); }
    int next(int s, int a) const { return delta[static_cast<std::size_t>(s) * k + a]; }
    int add_state(bool accepting) {
        accept.push_back(accepting ? 1 : 0);
        delta.resize(delta.size() + k, -1);
        return size() - 1;
    }
    void set(int s, int a, int t) { delta[static_cast<std::size_t>(s) * k + a] = t; }
    int run(int s, const Word& w) const {
        for (std::size_t i = 0; i < w.size() && s >= 0; ++i) s = next(s, w[i]);
        return s;
    }
};

Automaton to_automaton(const AcyclicDfa& d) {
    Automaton a;
    a.k = d.alphabet().k();
    for (int s = 0; s < d.size(); ++s) a.add_state(s == d.accept());
    for (int s = 0; s < d.size(); ++s)
        for (int l = 0; l < a.k; ++l) a.set(s, l, d.next(s, l));
    a.start = d.is_empty() ? -1 : d.start();
    return a;
}

// Accepts A*: one accepting state looping on every letter.
Automaton universal(int k) {
    Automaton a;
    a.k = k;
    a.start = a.add_state(true);
    for (int l = 0; l < k; ++l) a.set(0, l, 0);
    return a;
}

// Keeps states that are reachable and can reach an accept state, numbered in
// breadth-first order from the start.
Automaton trim(const Automaton& a) {
    Automaton out;
    out.k = a.k;
    if (a.start < 0) return out;
    std::vector<std::vector<int>> reverse(a.size());
    for (int s = 0; s < a.size(); ++s)
        for (int l = 0; l < a.k; ++l)
            if (int t = a.next(s, l); t >= 0) reverse[t].push_back(s);
    std::vector<char> useful(a.size(), 0);
    std::deque<int> queue;
    for (int s = 0; s < a.size(); ++s)
        if (a.accept[s]) {
            useful[s] = 1;
            queue.push_back(s);
        }
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        for (int p : reverse[s])
            if (!useful[p]) {
                useful[p] = 1;
                queue.push_back(p);
            }
    }
    if (!useful[a.start]) return out;
    std::vector<int> id(a.size(), -1);
    id[a.start] = out.add_state(a.accept[a.start]);
    queue.push_back(a.start);
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        for (int l = 0; l < a.k; ++l) {
            int t = a.next(s, l);
            if (t < 0 || !useful[t]) continue;
            if (id[t] < 0) {
                id[t] = out.add_state(a.accept[t]);
                queue.push_back(t);
            }
            out.set(id[s], l, id[t]);
        }
    }
    out.start = 0;
    return out;
}

AcyclicDfa to_acyclic(const Automaton& a, const Alphabet& alphabet) {
    if (a.start < 0 || a.size() == 0) return AcyclicDfa::empty(alphabet);
    int accept = -1;
    std::vector<AcyclicDfa::Edge> edges;
    for (int s = 0; s < a.size(); ++s) {
        if (a.accept[s]) {
            if (accept >= 0) throw InternalError("inverse image automaton has two accept states");
            accept = s;
        }
        for (int l = 0; l < a.k; ++l)
            if (int t = a.next(s, l); t >= 0) edges.push_back({s, l, t});
    }
    return AcyclicDfa(alphabet, a.size(), a.start, accept, edges);
}

// The two-part construction: a tree on the strict prefixes of domC(phi),
// whose leaf edges p are glued to the state reached in b by phi(p).
Automaton pull_back(const Morphism& phi, const Automaton& b) {
    Automaton out;
    out.k = b.k;
    if (phi.is_zero() || b.start < 0) return out;

    std::map<Word, int> tree;  // strict prefixes of domain words
    std::map<int, int> copied;  // state of b -> state of out
    std::vector<std::pair<int, int>> pending;  // (out state, b state) to copy edges for

    auto copy = [&](int bs) {
        auto [it, fresh] = copied.emplace(bs, -1);
        if (fresh) {
            it->second = out.add_state(b.accept[bs]);
            pending.emplace_back(it->second, bs);
        }
        return it->second;
    };
    auto node = [&](const Word& r) {
        auto [it, fresh] = tree.emplace(r, -1);
        if (fresh) it->second = out.add_state(false);
        return it->second;
    };

    const auto& entries = phi.entries();
    if (entries.size() == 1 && entries.front().first.empty()) {
        int t = b.run(b.start, entries.front().second);
        if (t < 0) return out;
        out.start = copy(t);
    } else {
        out.start = node(Word());
        std::unordered_map<std::string, int> glue;
        for (const auto& [p, y] : entries) {
            for (std::size_t len = 1; len < p.size(); ++len)
                out.set(node(p.prefix(len - 1)), p[len - 1], node(p.prefix(len)));
            auto [g, fresh] = glue.emplace(y.raw(), -1);
            if (fresh) {
                int t = b.run(b.start, y);
                g->second = t < 0 ? -1 : copy(t);
            }
            if (g->second >= 0) out.set(node(p.parent()), p.back(), g->second);
        }
    }
    while (!pending.empty()) {
        auto [os, bs] = pending.back();
        pending.pop_back();
        for (int l = 0; l < b.k; ++l) {
            int t = b.next(bs, l);
            if (t >= 0) out.set(os, l, copy(t));
        }
    }
    return out;
}

void check_poly_table(const Morphism& phi, const std::string& label) {
    if (!is_normal(phi)) throw PreconditionViolation(label + " is not normal");
    if (phi.domain_code().is_epsilon()) throw PreconditionViolation(label + " has domain code {()}");
    if (image_code(phi).is_epsilon()) throw PreconditionViolation(label + " has image code {()}");
}

// Union-find equivalence (Hopcroft-Karp) of two partial automata, each
// completed with a shared dead state.
bool equivalent(const Automaton& a, const Automaton& b) {
    const int na = a.size(), nb = b.size();
    const int dead = na + nb;
    std::vector<int> parent(na + nb + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto accepting = [&](int x) {
        if (x == dead) return false;
        return x < na ? a.accept[x] != 0 : b.accept[x - na] != 0;
    };
    auto step = [&](int x, int l) {
        if (x == dead) return dead;
        int t = x < na ? a.next(x, l) : b.next(x - na, l);
        return t < 0 ? dead : (x < na ? t : t + na);
    };
    const int sa = a.start < 0 ? dead : a.start;
    const int sb = b.start < 0 ? dead : b.start + na;
    std::vector<std::pair<int, int>> work{{sa, sb}};
    if (find(sa) != find(sb)) parent[find(sa)] = find(sb);
    while (!work.empty()) {
        auto [x, y] = work.back();
        work.pop_back();
        if (accepting(x) != accepting(y)) return false;
        for (int l = 0; l < a.k; ++l) {
            int u = step(x, l), v = step(y, l);
            int ru = find(u), rv = find(v);
            if (ru != rv) {
                parent[ru] = rv;
                work.emplace_back(u, v);
            }
        }
    }
    return true;
}

// Accepts L(a) intersected with L(b).
Automaton product(const Automaton& a, const Automaton& b) {
    Automaton out;
    out.k = a.k;
    if (a.start < 0 || b.start < 0) return out;
    std::unordered_map<long long, int> id;
    std::vector<std::pair<int, int>> work;
    auto get = [&](int x, int y) {
        long long key = static_cast<long long>(x) * (b.size() + 1) + y;
        auto [it, fresh] = id.emplace(key, -1);
        if (fresh) {
            it->second = out.add_state(a.accept[x] && b.accept[y]);
            work.emplace_back(x, y);
        }
        return it->second;
    };
    out.start = get(a.start, b.start);
    while (!work.empty()) {
        auto [x, y] = work.back();
        work.pop_back();
        int s = id[static_cast<long long>(x) * (b.size() + 1) + y];
        for (int l = 0; l < a.k; ++l) {
            int u = a.next(x, l), v = b.next(y, l);
            if (u >= 0 && v >= 0) out.set(s, l, get(u, v));
        }
    }
    return out;
}

// States from which some accept state is reachable.
std::vector<char> live_states(const Automaton& a) {
    std::vector<std::vector<int>> reverse(a.size());
    for (int s = 0; s < a.size(); ++s)
        for (int l = 0; l < a.k; ++l)
            if (int t = a.next(s, l); t >= 0) reverse[t].push_back(s);
    std::vector<char> live(a.size(), 0);
    std::vector<int> work;
    for (int s = 0; s < a.size(); ++s)
        if (a.accept[s]) {
            live[s] = 1;
            work.push_back(s);
        }
    while (!work.empty()) {
        int s = work.back();
        work.pop_back();
        for (int p : reverse[s])
            if (!live[p]) {
                live[p] = 1;
                work.push_back(p);
            }
    }
    return live;
}

// Whether the right ideals accepted by a and b intersect in an ideal that is
// essential in both: no word enters one ideal after which the other can never
// be entered.
bool ideals_essentially_equal(const Automaton& a, const Automaton& b) {
    std::vector<char> live_a = live_states(a), live_b = live_states(b);
    const int dead_a = a.size(), dead_b = b.size();
    auto acc = [](const Automaton& m, int s) { return s < m.size() && m.accept[s]; };
    auto live = [](const std::vector<char>& v, int s) { return s < static_cast<int>(v.size()) && v[s]; };
    std::vector<char> seen(static_cast<std::size_t>(dead_a + 1) * (dead_b + 1), 0);
    std::vector<std::pair<int, int>> work;
    auto visit = [&](int x, int y) {
        char& f = seen[static_cast<std::size_t>(x) * (dead_b + 1) + y];
        if (!f) {
            f = 1;
            work.emplace_back(x, y);
        }
    };
    visit(a.start < 0 ? dead_a : a.start, b.start < 0 ? dead_b : b.start);
    while (!work.empty()) {
        auto [x, y] = work.back();
        work.pop_back();
        if (acc(a, x) && !live(live_b, y)) return false;
        if (acc(b, y) && !live(live_a, x)) return false;
        if (x == dead_a && y == dead_b) continue;
        for (int l = 0; l < a.k; ++l) {
            int u = x == dead_a ? -1 : a.next(x, l);
            int v = y == dead_b ? -1 : b.next(y, l);
            visit(u < 0 ? dead_a : u, v < 0 ? dead_b : v);
        }
    }
    return true;
}

Automaton iterate_pull_back(const std::vector<Morphism>& seq, Automaton a) {
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) a = trim(pull_back(*it, a));
    return a;
}

}  // namespace

// --- AcyclicDfa ---------------------------------------------------------------

AcyclicDfa::AcyclicDfa(Alphabet alphabet, int states, int start, int accept, const std::vector<Edge>& edges)
    : alphabet_(alphabet), states_(states), start_(start), accept_(accept) {
    const int k = alphabet.k();
    if (states < 0) throw InvalidInput("negative state count");
    if (states == 0) {
        if (start != -1 || accept != -1 || !edges.empty())
            throw InvalidInput("the empty automaton has no start, accept state or edges");
        return;
    }
    if (start < 0 || start >= states || accept < 0 || accept >= states)
        throw InvalidInput("start or accept state out of range");
    delta_.assign(static_cast<std::size_t>(states) * k, -1);
    for (const Edge& e : edges) {
        const auto [from, letter, to] = e;
        if (from < 0 || from >= states || to < 0 || to >= states || letter < 0 || letter >= k)
            throw InvalidInput("edge [" + std::to_string(from) + "," + std::to_string(letter) + "," +
                               std::to_string(to) + "] is out of range");
        int& slot = delta_[static_cast<std::size_t>(from) * k + letter];
        if (slot >= 0) throw InvalidInput("two edges leave state " + std::to_string(from) + " on one letter");
        if (from == accept) throw InvalidInput("the accept state has an outgoing edge");
        slot = to;
    }
    // Kahn's algorithm: every state must be removed for the graph to be acyclic.
    std::vector<int> indegree(states, 0);
    for (int t : delta_)
        if (t >= 0) ++indegree[t];
    std::vector<int> ready;
    for (int s = 0; s < states; ++s)
        if (indegree[s] == 0) ready.push_back(s);
    int removed = 0;
    while (!ready.empty()) {
        int s = ready.back();
        ready.pop_back();
        ++removed;
        for (int l = 0; l < k; ++l)
            if (int t = next(s, l); t >= 0 && --indegree[t] == 0) ready.push_back(t);
    }
    if (removed != states) throw InvalidInput("automaton has a cycle");
}

AcyclicDfa AcyclicDfa::empty(Alphabet alphabet) { return AcyclicDfa(alphabet, 0, -1, -1, {}); }

std::vector<AcyclicDfa::Edge> AcyclicDfa::edges() const {
    std::vector<Edge> out;
    for (int s = 0; s < states_; ++s)
        for (int l = 0; l < alphabet_.k(); ++l)
            if (int t = next(s, l); t >= 0) out.push_back({s, l, t});
    return out;
}

std::size_t AcyclicDfa::depth() const {
    if (is_empty()) return 0;
    // Longest path from the start, by memoized search over the DAG.
    std::vector<int> memo(states_, -1);
    auto longest = [&](auto&& self, int s) -> int {
        if (memo[s] >= 0) return memo[s];
        int best = 0;
        for (int l = 0; l < alphabet_.k(); ++l)
            if (int t = next(s, l); t >= 0) best = std::max(best, 1 + self(self, t));
        return memo[s] = best;
    };
    return static_cast<std::size_t>(longest(longest, start_));
}

bool AcyclicDfa::accepts(const Word& w) const {
    if (is_empty()) return false;
    int s = start_;
    for (std::size_t i = 0; i < w.size() && s >= 0; ++i) s = next(s, w[i]);
    return s == accept_;
}

AcyclicDfa dfa_for_word(const Word& r, const Alphabet& alphabet) {
    check_letters(r, alphabet);
    std::vector<AcyclicDfa::Edge> edges;
    for (std::size_t i = 0; i < r.size(); ++i)
        edges.push_back({static_cast<int>(i), r[i], static_cast<int>(i + 1)});
    return AcyclicDfa(alphabet, static_cast<int>(r.size()) + 1, 0, static_cast<int>(r.size()), edges);
}

std::vector<Word> enumerate(const AcyclicDfa& dfa, std::size_t bound) {
    if (dfa.depth() > bound) {
        throw InvalidInput("enumeration bound " + std::to_string(bound) + " is below the longest path " +
                           std::to_string(dfa.depth()));
    }
    std::vector<Word> out;
    if (dfa.is_empty()) return out;
    Word w;
    auto walk = [&](auto&& self, int s) -> void {
        if (s == dfa.accept()) out.push_back(w);
        for (int l = 0; l < dfa.alphabet().k(); ++l) {
            int t = dfa.next(s, l);
            if (t < 0) continue;
            w.push_back(l);
            self(self, t);
            w.pop_back();
        }
    };
    walk(walk, dfa.start());
    std::sort(out.begin(), out.end());
    return out;
}

AcyclicDfa inverse_image_dfa(const Morphism& phi, const AcyclicDfa& dfa, std::size_t* raw_states) {
    check_poly_table(phi, "the morphism");
    Automaton raw = pull_back(phi, to_automaton(dfa));
    const std::size_t bound = static_cast<std::size_t>(dfa.size()) + phi.domain_code().total_length();
    if (raw.size() > 0 && static_cast<std::size_t>(raw.size()) >= bound)
        throw InternalError("inverse image automaton exceeds its size bound");
    if (raw_states) *raw_states = static_cast<std::size_t>(raw.size());
    return to_acyclic(trim(raw), dfa.alphabet());
}

AcyclicDfa iterated_inverse_image_dfa(const std::vector<Morphism>& seq, const AcyclicDfa& dfa,
                                      std::size_t* raw_states) {
    AcyclicDfa current = dfa;
    std::size_t largest = 0;
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
        std::size_t raw = 0;
        current = inverse_image_dfa(*it, current, &raw);
        largest = std::max(largest, raw);
    }
    if (raw_states) *raw_states = largest;
    return current;
}

bool dfa_equivalent(const AcyclicDfa& a, const AcyclicDfa& b) {
    if (!(a.alphabet() == b.alphabet())) throw InvalidInput("automata over different alphabets");
    return equivalent(to_automaton(a), to_automaton(b));
}

// --- image computations -------------------------------------------------------

PrefixCode imc_of_genword(const std::vector<Morphism>& seq) {
    if (seq.empty()) throw InvalidInput("empty morphism sequence");
    PrefixCode r = image_code(seq.front());
    for (std::size_t j = 1; j < seq.size(); ++j) {
        PrefixCode s = ideal_intersection(r, seq[j].domain_code());
        std::vector<Word> images;
        images.reserve(s.size());
        for (const Word& w : s.words()) images.push_back(*seq[j].apply(w));
        r = PrefixCode(PrefixCode::Trusted{}, r.alphabet(), minimal_elements(std::move(images)));
    }
    return r;
}

std::vector<Word> image_of_set(const std::vector<Morphism>& seq, std::vector<Word> s) {
    for (const Morphism& phi : seq) {
        std::vector<Word> next;
        next.reserve(s.size());
        for (const Word& w : s)
            if (auto v = phi.apply(w)) next.push_back(std::move(*v));
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        s = std::move(next);
    }
    return s;
}

std::vector<Word> covering_image_set(const std::vector<Morphism>& seq) {
    std::vector<Word> out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        std::vector<Morphism> rest(seq.begin() + static_cast<std::ptrdiff_t>(i) + 1, seq.end());
        std::vector<Word> part = image_of_set(rest, seq[i].image_set());
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// --- word problem ---------------------------------------------------------------

std::vector<Morphism> resolve_for_poly(const GenWord& w, const Alphabet& alphabet, int tau_cap) {
    std::vector<Morphism> seq;
    if (w.empty()) {
        seq.push_back(Morphism::identity_on(PrefixCode::letters(alphabet)));
        return seq;
    }
    std::map<std::string, Morphism> cache;
    for (auto it = w.tokens.rbegin(); it != w.tokens.rend(); ++it) {
        std::string label = format_token(*it);
        auto found = cache.find(label);
        if (found == cache.end()) {
            if (const auto* t = std::get_if<TauToken>(&*it); t && t->j > tau_cap) {
                throw ResourceLimit("token " + label + " exceeds the tau expansion cap j <= " +
                                    std::to_string(tau_cap));
            }
            Morphism table = token_table(*it, alphabet);
            check_poly_table(table, "token " + (label.size() > 60 ? label.substr(0, 57) + "..." : label));
            found = cache.emplace(label, std::move(table)).first;
        }
        seq.push_back(found->second);
    }
    return seq;
}

bool word_problem_poly(const GenWord& w1, const GenWord& w2, const Alphabet& alphabet,
                       const WordProblemOptions& options, WordProblemStats* stats) {
    std::vector<Morphism> rho = resolve_for_poly(w1, alphabet, options.tau_cap);
    std::vector<Morphism> sigma = resolve_for_poly(w2, alphabet, options.tau_cap);
    WordProblemStats local;
    WordProblemStats& st = stats ? *stats : local;

    // Equal elements have essentially equal image ideals.
    PrefixCode imc_rho = imc_of_genword(rho);
    PrefixCode imc_sigma = imc_of_genword(sigma);
    st.imc_left = imc_rho.size();
    st.imc_right = imc_sigma.size();
    if (!essentially_equal(imc_rho, imc_sigma)) return false;
    PrefixCode pi = ideal_intersection(imc_rho, imc_sigma);
    if (pi.empty()) return true;  // both sides are the zero element

    // Restrict both images to the common ideal; the inverse-image construction needs domC != {()}.
    Morphism id_pi = Morphism::identity_on(pi.is_epsilon() ? PrefixCode::letters(alphabet) : pi);
    rho.push_back(id_pi);
    sigma.push_back(id_pi);

    std::vector<Word> r = covering_image_set(rho);
    std::vector<Word> r2 = covering_image_set(sigma);
    r.insert(r.end(), r2.begin(), r2.end());
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    st.covering_words = r.size();

    // The raw composites may differ by an essential restriction of their
    // domains, so inverse images are compared inside the common domain and
    // the domains themselves are compared up to essential equality.
    const int k = alphabet.k();
    Automaton dom_rho = iterate_pull_back(rho, universal(k));
    Automaton dom_sigma = iterate_pull_back(sigma, universal(k));
    if (!ideals_essentially_equal(dom_rho, dom_sigma)) return false;

    auto agree_at = [&](const Word& target, std::size_t& largest) {
        Automaton seed = to_automaton(dfa_for_word(target, alphabet));
        Automaton a = iterate_pull_back(rho, seed);
        Automaton b = iterate_pull_back(sigma, seed);
        largest = std::max<std::size_t>(largest, std::max(a.size(), b.size()));
        return equivalent(product(a, dom_sigma), product(b, dom_rho));
    };

    std::size_t largest = static_cast<std::size_t>(std::max(dom_rho.size(), dom_sigma.size()));
    bool equal = true;
    if (!options.parallel || r.size() < 2) {
        for (const Word& target : r)
            if (!agree_at(target, largest)) {
                equal = false;
                break;
            }
    } else {
        const std::size_t workers =
            std::min<std::size_t>(r.size(), std::max(1u, std::thread::hardware_concurrency()));
        std::vector<std::future<std::pair<bool, std::size_t>>> jobs;
        for (std::size_t t = 0; t < workers; ++t) {
            jobs.push_back(std::async(std::launch::async, [&, t] {
                std::size_t big = 0;
                bool ok = true;
                for (std::size_t i = t; i < r.size() && ok; i += workers) ok = agree_at(r[i], big);
                return std::make_pair(ok, big);
            }));
        }
        for (auto& job : jobs) {
            auto [ok, big] = job.get();
            equal = equal && ok;
            largest = std::max(largest, big);
        }
    }
    st.largest_dfa = largest;
    return equal;
}

std::size_t bruteforce_length(const GenWord& w, const Alphabet& alphabet) {
    std::size_t n = 0;
    for (const auto& token : w.tokens) {
        if (const auto* t = std::get_if<TauToken>(&token)) {
            n += static_cast<std::size_t>(t->j);
            continue;
        }
        Morphism m = token_table(token, alphabet);
        std::size_t longest = 0;
        for (const auto& [x, y] : m.entries()) longest = std::max({longest, x.size(), y.size()});
        n += longest;
    }
    return n;
}

namespace {

// Applies a generator word to single words, transposing letters directly for tau.
class PointwiseEvaluator {
public:
    PointwiseEvaluator(const GenWord& w, const Alphabet& alphabet) {
        for (auto it = w.tokens.rbegin(); it != w.tokens.rend(); ++it) {
            if (const auto* t = std::get_if<TauToken>(&*it)) {
                steps_.push_back({std::nullopt, *t});
            } else {
                steps_.push_back({token_table(*it, alphabet), {}});
            }
        }
    }

    std::optional<Word> operator()(Word w) const {
        for (const Step& s : steps_) {
            if (s.table) {
                auto v = s.table->apply(w);
                if (!v) return std::nullopt;
                w = std::move(*v);
            } else {
                if (w.size() < static_cast<std::size_t>(s.tau.j)) return std::nullopt;
                std::string raw = w.raw();
                std::swap(raw[s.tau.i - 1], raw[s.tau.j - 1]);
                w = Word(std::move(raw));
            }
        }
        return w;
    }

private:
    struct Step {
        std::optional<Morphism> table;
        TauToken tau;
    };
    std::vector<Step> steps_;
};

}  // namespace

bool word_problem_bruteforce(const GenWord& w1, const GenWord& w2, const Alphabet& alphabet,
                             std::size_t n_cap) {
    const std::size_t n = std::max(bruteforce_length(w1, alphabet), bruteforce_length(w2, alphabet));
    if (n > n_cap) {
        throw ResourceLimit("brute force needs all words of length " + std::to_string(n) +
                            ", above the cap " + std::to_string(n_cap));
    }
    PointwiseEvaluator left(w1, alphabet), right(w2, alphabet);
    // Odometer over A^n, so the word list is never materialized.
    std::string x(n, '\0');
    const char top = static_cast<char>(alphabet.k() - 1);
    while (true) {
        Word w(x);
        if (left(w) != right(w)) return false;
        std::size_t i = n;
        while (i > 0 && x[i - 1] == top) x[--i] = '\0';
        if (i == 0) return true;
        ++x[i - 1];
    }
}

// --- serialization -------------------------------------------------------------

std::string dfa_to_json(const AcyclicDfa& dfa) {
    nlohmann::ordered_json j;
    j["states"] = dfa.size();
    if (dfa.is_empty()) {
        j["start"] = nullptr;
        j["accept"] = nullptr;
    } else {
        j["start"] = dfa.start();
        j["accept"] = dfa.accept();
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : dfa.edges()) j["edges"].push_back({e[0], e[1], e[2]});
    return j.dump();
}

AcyclicDfa dfa_from_json(std::string_view text, const Alphabet& alphabet) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError("malformed automaton JSON", line, column);
    }
    try {
        int states = j.at("states").get<int>();
        int start = j.at("start").is_null() ? -1 : j.at("start").get<int>();
        int accept = j.at("accept").is_null() ? -1 : j.at("accept").get<int>();
        std::vector<AcyclicDfa::Edge> edges;
        for (const auto& e : j.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()});
        return AcyclicDfa(alphabet, states, start, accept, edges);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("automaton JSON has the wrong shape: ") + e.what());
    }
}

std::string dfa_to_dot(const AcyclicDfa& dfa) {
    std::string out = "digraph dfa {\n  rankdir=LR;\n  node [shape=circle];\n";
    if (!dfa.is_empty()) {
        out += "  init [shape=point];\n";
        out += "  " + std::to_string(dfa.accept()) + " [shape=doublecircle];\n";
        out += "  init -> " + std::to_string(dfa.start()) + ";\n";
        for (const auto& e : dfa.edges()) {
            out += "  " + std::to_string(e[0]) + " -> " + std::to_string(e[2]) + " [label=\"" +
                   format_word_plain(Word{e[1]}) + "\"];\n";
        }
    }
    return out + "}\n";
}

}  // namespace thmon
