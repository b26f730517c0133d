#include "base/abgroup.hpp"

#include <algorithm>
#include <deque>

#include "base/error.hpp"

namespace ct2 {

AbGroupStructure
abgroup_structure(const std::string& identity,
                  const std::vector<std::string>& generators,
                  const std::function<std::string(const std::string&, const std::string&)>& compose,
                  size_t budget) {
    // BFS over the Cayley graph, recording one exponent vector per element;
    // every closing edge contributes a relation vector.
    size_t k = generators.size();
    std::map<std::string, std::vector<Int>> seen;
    seen[identity] = std::vector<Int>(k, Int(0));
    std::deque<std::string> queue{identity};
    std::vector<std::vector<Int>> relations;
    while (!queue.empty()) {
        std::string cur = queue.front();
        queue.pop_front();
        const std::vector<Int> cur_vec = seen[cur];
        for (size_t j = 0; j < k; ++j) {
            std::string nxt = compose(cur, generators[j]);
            std::vector<Int> nvec = cur_vec;
            nvec[j] += 1;
            auto it = seen.find(nxt);
            if (it == seen.end()) {
                check(seen.size() < budget, errc::budget_exceeded, "abgroup closure too large");
                seen[nxt] = nvec;
                queue.push_back(nxt);
            } else {
                // relation: nvec - existing vector
                std::vector<Int> rel(k);
                bool nonzero = false;
                for (size_t t = 0; t < k; ++t) {
                    rel[t] = nvec[t] - it->second[t];
                    if (rel[t] != 0) nonzero = true;
                }
                if (nonzero) relations.push_back(std::move(rel));
            }
        }
    }

    AbGroupStructure out;
    out.order = Int(static_cast<unsigned long>(seen.size()));
    for (auto& [key, vec] : seen) {
        out.elements.push_back(key);
        out.dlogs.push_back(vec);
    }
    if (k == 0 || relations.empty()) {
        check(seen.size() == 1, errc::internal, "abgroup: no relations but nontrivial closure");
        return out;
    }
    ZMat R(relations.size(), k);
    for (size_t i = 0; i < relations.size(); ++i)
        for (size_t j = 0; j < k; ++j) R.at(i, j) = relations[i][j];
    std::vector<Int> d = snf(R);
    Int prod = 1;
    for (auto& di : d) {
        check(di != 0, errc::internal, "abgroup: relation lattice not full rank");
        if (di > 1) out.divisors.push_back(di);
        prod *= di;
    }
    std::sort(out.divisors.begin(), out.divisors.end());
    check(prod == out.order, errc::internal,
          "abgroup: SNF order mismatch (" + prod.get_str() + " vs " + out.order.get_str() + ")");
    return out;
}

std::vector<std::vector<Int>> torsion_exponents(const std::vector<Int>& divisors, const Int& m) {
    std::vector<std::vector<Int>> out{{}};
    for (const auto& d : divisors) {
        Int g = gcd(d, m);
        Int step = divexact(d, g);
        std::vector<std::vector<Int>> next;
        for (const auto& v : out) {
            for (Int t = 0; t < g; ++t) {
                auto w = v;
                w.push_back(t * step);
                next.push_back(std::move(w));
            }
        }
        out = std::move(next);
    }
    return out;
}

} // namespace ct2
