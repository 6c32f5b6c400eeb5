#include "nac/uniform.hpp"

#include <algorithm>

namespace nac {

namespace {

// The single block of p containing all of s, or -1.
int enclosing_block(const Partition& p, const std::vector<int>& s) {
    int block = p.block_id_of(s.front());
    for (int pt : s) {
        if (p.block_id_of(pt) != block) return -1;
    }
    return block;
}

bool is_cauchy_generating_set(const std::vector<int>& s, const std::vector<Partition>& members) {
    for (const Partition& m : members) {
        if (enclosing_block(m, s) < 0) return false;
    }
    return true;
}

}  // namespace

bool is_intersection_closed(const NASpace& x) {
    for (size_t i = 0; i < x.generators.size(); ++i) {
        for (size_t j = i + 1; j < x.generators.size(); ++j) {
            if (!contains(x, meet(x.generators[i], x.generators[j]))) return false;
        }
    }
    return true;
}

void require_uniform_case(const NASpace& x) {
    if (!is_intersection_closed(x)) {
        throw error("stack is not closed under intersections");
    }
    if (!is_t0(x)) throw error("requires a T0 space");
}

SetFilter filter_of_choice(const NASpace& x, const ChoiceFunction& f) {
    require_uniform_case(x);
    std::vector<int> s = limit_points(x, f);
    if (s.empty()) throw error("filter_of_choice: chosen blocks have empty intersection");
    return SetFilter{x.carrier, std::move(s)};
}

ChoiceFunction choice_of_filter(const NASpace& x, const SetFilter& f) {
    require_uniform_case(x);
    if (f.generating_set.empty()) throw error("choice_of_filter: improper filter");
    ChoiceFunction out;
    out.chosen.reserve(x.generators.size());
    for (const Partition& g : x.generators) {
        int block = enclosing_block(g, f.generating_set);
        if (block < 0) throw error("choice_of_filter: filter is not Cauchy");
        out.chosen.push_back(block);
    }
    return out;
}

std::vector<SetFilter> minimal_cauchy_filters(const NASpace& x) {
    require_uniform_case(x);
    std::vector<SetFilter> out;
    for (const ChoiceFunction& f : enumerate_choice_functions(x)) {
        out.push_back(filter_of_choice(x, f));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SetFilter> minimal_cauchy_filter_oracle(const NASpace& x) {
    require_uniform_case(x);
    const int n = x.size();
    const auto members = stack_members(x);

    std::vector<std::vector<int>> cauchy;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int pt = 0; pt < n; ++pt) {
            if (mask & (1u << pt)) s.push_back(pt);
        }
        if (is_cauchy_generating_set(s, members)) cauchy.push_back(std::move(s));
    }

    // minimal filter = maximal generating set
    std::vector<SetFilter> out;
    for (const auto& s : cauchy) {
        bool maximal = true;
        for (const auto& t : cauchy) {
            if (t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(SetFilter{x.carrier, s});
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool filter_converges(const NASpace& x, const SetFilter& f, int point) {
    require_uniform_case(x);
    if (point < 0 || point >= x.size()) throw error("filter_converges: unknown point");
    for (const Partition& m : stack_members(x)) {
        int neighborhood = m.block_id_of(point);
        for (int pt : f.generating_set) {
            if (m.block_id_of(pt) != neighborhood) return false;
        }
    }
    return true;
}

std::vector<std::vector<int>> filter_block_family(const NASpace& x, const SetFilter& f) {
    require_uniform_case(x);
    std::vector<std::vector<int>> out;
    for (const Partition& m : stack_members(x)) {
        int block = enclosing_block(m, f.generating_set);
        if (block < 0) throw error("filter_block_family: filter is not Cauchy");
        out.push_back(m.block_members(block));
    }
    return out;
}

}  // namespace nac
