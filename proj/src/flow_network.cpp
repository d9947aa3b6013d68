#include "flow_network.hpp"

#include <algorithm>

namespace gcut::detail {

FlowNetwork::FlowNetwork(const Graph& g)
    : order_(g.order()), offsets_(g.order() + 1, 0), role_(g.order(), kNone), level_(g.order(), -1),
      next_arc_(g.order(), 0) {
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) continue;
        ++offsets_[e.u + 1];
        ++offsets_[e.v + 1];
    }
    for (std::size_t u = 0; u < order_; ++u) offsets_[u + 1] += offsets_[u];
    arcs_.resize(offsets_[order_]);
    base_capacity_.resize(offsets_[order_]);
    std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) continue;
        std::uint32_t a = fill[e.u]++;
        std::uint32_t b = fill[e.v]++;
        arcs_[a] = Arc{e.v, b};
        arcs_[b] = Arc{e.u, a};
        base_capacity_[a] = e.multiplicity;
        base_capacity_[b] = e.multiplicity;
    }
    queue_.reserve(order_);
}

std::uint64_t FlowNetwork::run(std::span<const Vertex> sources, std::span<const Vertex> sinks,
                               std::uint64_t limit) {
    capacity_ = base_capacity_;
    std::fill(role_.begin(), role_.end(), kNone);
    for (Vertex s : sources) role_[s] = kSource;
    for (Vertex t : sinks) role_[t] = kSink;
    sources_.assign(sources.begin(), sources.end());

    std::uint64_t flow = 0;
    while (flow < limit && build_levels()) {
        std::copy(offsets_.begin(), offsets_.end() - 1, next_arc_.begin());
        for (Vertex s : sources_) {
            while (flow < limit) {
                std::uint64_t pushed = push(s, UINT64_MAX);
                if (pushed == 0) break;
                flow += pushed;
            }
        }
    }
    return flow;
}

bool FlowNetwork::build_levels() {
    std::fill(level_.begin(), level_.end(), -1);
    queue_.clear();
    for (Vertex s : sources_) {
        level_[s] = 0;
        queue_.push_back(s);
    }
    bool reached = false;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
        Vertex u = queue_[head];
        if (role_[u] == kSink) {
            reached = true;
            continue;
        }
        for (std::uint32_t a = offsets_[u]; a < offsets_[u + 1]; ++a) {
            Vertex w = arcs_[a].to;
            if (capacity_[a] > 0 && level_[w] < 0) {
                level_[w] = level_[u] + 1;
                queue_.push_back(w);
            }
        }
    }
    return reached;
}

std::uint64_t FlowNetwork::push(Vertex u, std::uint64_t limit) {
    if (role_[u] == kSink) return limit;
    for (std::uint32_t& a = next_arc_[u]; a < offsets_[u + 1]; ++a) {
        Vertex w = arcs_[a].to;
        if (capacity_[a] == 0 || level_[w] != level_[u] + 1) continue;
        std::uint64_t pushed = push(w, std::min(limit, capacity_[a]));
        if (pushed > 0) {
            capacity_[a] -= pushed;
            capacity_[arcs_[a].reverse] += pushed;
            return pushed;
        }
    }
    return 0;
}

std::vector<bool> FlowNetwork::source_side() const {
    std::vector<bool> reach(order_, false);
    std::vector<Vertex> stack(sources_.begin(), sources_.end());
    for (Vertex s : sources_) reach[s] = true;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (std::uint32_t a = offsets_[u]; a < offsets_[u + 1]; ++a) {
            Vertex w = arcs_[a].to;
            if (capacity_[a] > 0 && !reach[w]) {
                reach[w] = true;
                stack.push_back(w);
            }
        }
    }
    return reach;
}

}  // namespace gcut::detail
