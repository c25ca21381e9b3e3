#include "matchkit/generators.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace matchkit {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

namespace {

std::mt19937_64 seeded_rng(std::uint64_t seed) { return std::mt19937_64(splitmix64(seed)); }

std::vector<int> identity_permutation(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

}  // namespace

std::vector<int> sample_mallows_permutation(const std::vector<int>& reference, double phi,
                                            std::mt19937_64& rng) {
    const int n = static_cast<int>(reference.size());
    std::vector<int> result;
    result.reserve(static_cast<size_t>(n));
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    double denom = 1.0;  // sum_{t=0}^{k} phi^t, updated incrementally
    for (int k = 0; k < n; ++k) {
        if (k > 0) denom = 1.0 + phi * denom;
        // Walk positions from the back (j = k, weight phi^0) toward the front.
        double u = unit(rng) * denom;
        int pos = k;
        double w = 1.0;
        while (pos > 0) {
            u -= w;
            if (u <= 0.0) break;
            w *= phi;
            --pos;
        }
        result.insert(result.begin() + pos, reference[static_cast<size_t>(k)]);
    }
    return result;
}

Instance sample_mallows(const MallowsParams& params, std::uint64_t seed) {
    if (params.phi < 0.0 || params.phi > 1.0) {
        throw std::invalid_argument("phi must lie in [0, 1]");
    }
    const int n = params.n;
    const std::vector<int> rref =
        params.resident_reference.empty() ? identity_permutation(n) : params.resident_reference;
    const std::vector<int> href =
        params.hospital_reference.empty() ? identity_permutation(n) : params.hospital_reference;

    auto rng = seeded_rng(seed);
    std::vector<std::vector<int>> residents(static_cast<size_t>(n));
    std::vector<std::vector<int>> hospitals(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) {
        residents[static_cast<size_t>(a)] = sample_mallows_permutation(rref, params.phi, rng);
    }
    for (int a = 0; a < n; ++a) {
        hospitals[static_cast<size_t>(a)] = sample_mallows_permutation(href, params.phi, rng);
    }
    return Instance(std::move(residents), std::move(hospitals));
}

std::vector<int> tier_sizes(int n, const std::vector<double>& fractions) {
    double sum = std::accumulate(fractions.begin(), fractions.end(), 0.0);
    if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("tier fractions must sum to 1");
    std::vector<int> sizes;
    sizes.reserve(fractions.size());
    int assigned = 0;
    for (double f : fractions) {
        const int s = static_cast<int>(std::floor(f * n));
        sizes.push_back(s);
        assigned += s;
    }
    const auto largest = std::max_element(fractions.begin(), fractions.end());
    sizes[static_cast<size_t>(largest - fractions.begin())] += n - assigned;
    return sizes;
}

namespace {

std::vector<double> agent_weights(int n, const TierParams& params) {
    if (params.weights.size() != params.fractions.size()) {
        throw std::invalid_argument("tier weights and fractions must have equal length");
    }
    for (double w : params.weights) {
        if (w <= 0.0) throw std::invalid_argument("tier weights must be positive");
    }
    const std::vector<int> sizes = tier_sizes(n, params.fractions);
    std::vector<double> weights(static_cast<size_t>(n));
    int agent = 0;
    for (size_t tier = 0; tier < sizes.size(); ++tier) {
        for (int i = 0; i < sizes[tier]; ++i) weights[static_cast<size_t>(agent++)] = params.weights[tier];
    }
    return weights;
}

// Weighted sampling without replacement (Efraimidis-Spirakis keys), equal in
// distribution to repeatedly drawing candidates with probability proportional
// to weight.
std::vector<int> weighted_order(const std::vector<double>& weights, std::mt19937_64& rng) {
    const int n = static_cast<int>(weights.size());
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::pair<double, int>> keyed(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double u = unit(rng);
        while (u == 0.0) u = unit(rng);
        keyed[static_cast<size_t>(i)] = {std::log(u) / weights[static_cast<size_t>(i)], i};
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = keyed[static_cast<size_t>(i)].second;
    return order;
}

}  // namespace

Instance sample_tiered(int n, const TierParams& params, std::uint64_t seed) {
    const std::vector<double> weights = agent_weights(n, params);
    auto rng = seeded_rng(seed);
    std::vector<std::vector<int>> residents(static_cast<size_t>(n));
    std::vector<std::vector<int>> hospitals(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) residents[static_cast<size_t>(a)] = weighted_order(weights, rng);
    for (int a = 0; a < n; ++a) hospitals[static_cast<size_t>(a)] = weighted_order(weights, rng);
    return Instance(std::move(residents), std::move(hospitals));
}

RatingTable RatingTable::from_joint(const std::array<std::array<double, 10>, 10>& joint,
                                    double popularity_strength, double jitter_scale) {
    RatingTable t;
    t.popularity_strength = popularity_strength;
    t.jitter_scale = jitter_scale;
    double total = 0.0;
    for (const auto& row : joint) {
        for (double v : row) {
            if (v < 0.0 || !std::isfinite(v)) throw std::invalid_argument("table entries must be >= 0");
            total += v;
        }
    }
    if (total <= 0.0) throw std::invalid_argument("rating table must have positive mass");
    for (int i = 0; i < 10; ++i) {
        double row_sum = std::accumulate(joint[i].begin(), joint[i].end(), 0.0);
        t.row_weight[i] = row_sum / total;
        for (int j = 0; j < 10; ++j) {
            t.rows[i][j] = row_sum > 0.0 ? joint[i][j] / row_sum : (j == i ? 1.0 : 0.0);
        }
    }
    return t;
}

RatingTable RatingTable::default_table() {
    // Synthetic stand-in for a rating-pair table: mid ratings common, strong
    // agreement between the two directions.
    std::array<std::array<double, 10>, 10> joint{};
    const double level[10] = {1, 2, 4, 6, 8, 8, 6, 4, 2, 1};
    for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 10; ++j) {
            joint[i][j] = level[i] * level[j] * std::exp(-std::abs(i - j) / 1.5);
        }
    }
    return from_joint(joint);
}

RatingTable RatingTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open rating table: " + path);
    std::array<std::array<double, 10>, 10> joint{};
    double popularity_strength = 0.05;
    double jitter_scale = 0.01;
    int row = 0;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string first;
        ls >> first;
        if (first == "popularity_strength") {
            if (!(ls >> popularity_strength)) {
                throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                         ": expected a value after popularity_strength");
            }
            continue;
        }
        if (first == "jitter_scale") {
            if (!(ls >> jitter_scale)) {
                throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                         ": expected a value after jitter_scale");
            }
            continue;
        }
        if (row >= 10) throw std::runtime_error(path + ": more than 10 table rows");
        std::istringstream row_stream(line);
        for (int j = 0; j < 10; ++j) {
            if (!(row_stream >> joint[row][j])) {
                throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                         ": expected 10 decimals per row");
            }
        }
        ++row;
    }
    if (row != 10) throw std::runtime_error(path + ": expected 10 table rows, got " + std::to_string(row));
    return from_joint(joint, popularity_strength, jitter_scale);
}

void RatingTable::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write rating table: " + path);
    out << "# 10x10 joint probabilities over (resident-side rating, hospital-side rating)\n";
    char buf[32];
    for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 10; ++j) {
            std::snprintf(buf, sizeof buf, "%.6f", rows[i][j] * row_weight[i]);
            out << buf << (j + 1 < 10 ? ' ' : '\n');
        }
    }
    out << "popularity_strength " << popularity_strength << "\n";
    out << "jitter_scale " << jitter_scale << "\n";
}

namespace {

struct RatingDraw {
    int resident_side = 0;  // resident's rating of the hospital, 1..10
    int hospital_side = 0;  // hospital's rating of the resident, 1..10
};

RatingDraw draw_rating_pair(const RatingTable& table, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double u = unit(rng);
    int i = 9;
    for (int k = 0; k < 10; ++k) {
        u -= table.row_weight[k];
        if (u <= 0.0) {
            i = k;
            break;
        }
    }
    double v = unit(rng);
    int j = 9;
    for (int k = 0; k < 10; ++k) {
        v -= table.rows[i][k];
        if (v <= 0.0) {
            j = k;
            break;
        }
    }
    return {i + 1, j + 1};
}

std::vector<int> rank_by_descending_score(const std::vector<double>& scores) {
    std::vector<int> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (scores[static_cast<size_t>(a)] != scores[static_cast<size_t>(b)]) {
            return scores[static_cast<size_t>(a)] > scores[static_cast<size_t>(b)];
        }
        return a < b;
    });
    return order;
}

}  // namespace

Instance sample_rating_market(int n, const RatingTable& table, std::uint64_t seed) {
    auto rng = seeded_rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    // ratings_r[r][h]: r's rating of h; ratings_h[h][r]: h's rating of r.
    std::vector<std::vector<int>> ratings_r(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    std::vector<std::vector<int>> ratings_h(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int r = 0; r < n; ++r) {
        for (int h = 0; h < n; ++h) {
            const RatingDraw draw = draw_rating_pair(table, rng);
            ratings_r[static_cast<size_t>(r)][static_cast<size_t>(h)] = draw.resident_side;
            ratings_h[static_cast<size_t>(h)][static_cast<size_t>(r)] = draw.hospital_side;
        }
    }

    // Popularity = mean rating received, scaled to (0, 1].
    std::vector<double> pop_h(static_cast<size_t>(n), 0.0), pop_r(static_cast<size_t>(n), 0.0);
    for (int r = 0; r < n; ++r) {
        for (int h = 0; h < n; ++h) {
            pop_h[static_cast<size_t>(h)] += ratings_r[static_cast<size_t>(r)][static_cast<size_t>(h)];
            pop_r[static_cast<size_t>(r)] += ratings_h[static_cast<size_t>(h)][static_cast<size_t>(r)];
        }
    }
    for (int a = 0; a < n; ++a) {
        pop_h[static_cast<size_t>(a)] /= 10.0 * n;
        pop_r[static_cast<size_t>(a)] /= 10.0 * n;
    }

    auto build_side = [&](const std::vector<std::vector<int>>& ratings,
                          const std::vector<double>& counterpart_pop) {
        std::vector<std::vector<int>> lists(static_cast<size_t>(n));
        std::vector<double> scores(static_cast<size_t>(n));
        for (int a = 0; a < n; ++a) {
            for (int c = 0; c < n; ++c) {
                scores[static_cast<size_t>(c)] = ratings[static_cast<size_t>(a)][static_cast<size_t>(c)] +
                                                 table.popularity_strength * counterpart_pop[static_cast<size_t>(c)] +
                                                 table.jitter_scale * unit(rng);
            }
            lists[static_cast<size_t>(a)] = rank_by_descending_score(scores);
        }
        return lists;
    };

    std::vector<std::vector<int>> resident_lists = build_side(ratings_r, pop_h);
    std::vector<std::vector<int>> hospital_lists = build_side(ratings_h, pop_r);

    // Relabel each side so lower index = more popular.
    auto relabel_order = [&](const std::vector<double>& pop) {
        std::vector<int> order(static_cast<size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (pop[static_cast<size_t>(a)] != pop[static_cast<size_t>(b)]) {
                return pop[static_cast<size_t>(a)] > pop[static_cast<size_t>(b)];
            }
            return a < b;
        });
        std::vector<int> new_label(static_cast<size_t>(n));
        for (int pos = 0; pos < n; ++pos) new_label[static_cast<size_t>(order[static_cast<size_t>(pos)]]] = pos;
        return std::pair{order, new_label};
    };

    auto [r_order, r_new] = relabel_order(pop_r);
    auto [h_order, h_new] = relabel_order(pop_h);

    std::vector<std::vector<int>> residents(static_cast<size_t>(n));
    std::vector<std::vector<int>> hospitals(static_cast<size_t>(n));
    for (int pos = 0; pos < n; ++pos) {
        const int old_r = r_order[static_cast<size_t>(pos)];
        auto& list = residents[static_cast<size_t>(pos)];
        list.reserve(static_cast<size_t>(n));
        for (int h : resident_lists[static_cast<size_t>(old_r)]) list.push_back(h_new[static_cast<size_t>(h)]);
    }
    for (int pos = 0; pos < n; ++pos) {
        const int old_h = h_order[static_cast<size_t>(pos)];
        auto& list = hospitals[static_cast<size_t>(pos)];
        list.reserve(static_cast<size_t>(n));
        for (int r : hospital_lists[static_cast<size_t>(old_h)]) list.push_back(r_new[static_cast<size_t>(r)]);
    }
    return Instance(std::move(residents), std::move(hospitals));
}

Instance sample_uniform(int n, std::uint64_t seed) {
    auto rng = seeded_rng(seed);
    std::vector<std::vector<int>> residents(static_cast<size_t>(n));
    std::vector<std::vector<int>> hospitals(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) {
        residents[static_cast<size_t>(a)] = identity_permutation(n);
        std::shuffle(residents[static_cast<size_t>(a)].begin(), residents[static_cast<size_t>(a)].end(), rng);
    }
    for (int a = 0; a < n; ++a) {
        hospitals[static_cast<size_t>(a)] = identity_permutation(n);
        std::shuffle(hospitals[static_cast<size_t>(a)].begin(), hospitals[static_cast<size_t>(a)].end(), rng);
    }
    return Instance(std::move(residents), std::move(hospitals));
}

Figure1 figure1_instance() {
    Instance inst({{0, 3, 1, 2},    // r1: h1 h4 h2 h3
                   {3, 2, 0, 1},    // r2: h4 h3 h1 h2
                   {0, 2, 1, 3},    // r3: h1 h3 h2 h4
                   {0, 3, 1, 2}},   // r4: h1 h4 h2 h3
                  {{1, 2, 0, 3},    // h1: r2 r3 r1 r4
                   {2, 1, 0, 3},    // h2: r3 r2 r1 r4
                   {3, 0, 2, 1},    // h3: r4 r1 r3 r2
                   {2, 1, 3, 0}});  // h4: r3 r2 r4 r1
    Matching mu = Matching::from_resident_assignment({1, 3, 0, 2});
    std::vector<int> rho{2, 3, 1, 2};
    std::vector<int> eta{1, 1, 1, 1};
    PredictionWindow window = PredictionWindow::from_rank_and_error(rho, eta, 4);
    return {std::move(inst), std::move(mu), std::move(rho), std::move(eta), std::move(window)};
}

}  // namespace matchkit
