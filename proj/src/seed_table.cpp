#include "ng/seed_table.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <stdexcept>

#include "ng/group.hpp"

namespace ng {

namespace {

std::vector<SeedRow> build_table() {
    std::vector<SeedRow> t;
    auto row = [&](std::vector<long> fac, long c24, std::vector<long> ms, std::vector<int> as,
                   std::vector<long> qp, std::vector<long> qpg, std::vector<double> j) {
        t.push_back(SeedRow{std::move(fac), c24, std::move(ms), std::move(as), std::move(qp),
                            std::move(qpg), std::move(j)});
    };
    // Z_1 .. Z_13 and the product groups, transcribed row by row.
    row({1}, 0, {1}, {}, {2}, {}, {});
    row({2}, 17, {1}, {1}, {-1, -5}, {}, {0.78539816});
    row({2}, 7, {1}, {-1}, {1, 5}, {}, {-0.78539816});
    row({3}, -2, {1}, {}, {1}, {}, {-2.8484536});
    row({3}, 2, {-1}, {}, {-1}, {}, {2.8484536});
    row({4}, 9, {1}, {1}, {3, -3}, {}, {-0.60623837, -1.5707963});
    row({4}, -9, {-1}, {1}, {-3, 3}, {}, {-1.39163653, 1.57079632});
    row({2, 2}, 0, {1, 1}, {1, 1}, {}, {},
        {-2.356194490, 2.356194490, 0.0});
    row({5}, 12, {1}, {}, {1, 1}, {3, 3}, {-1.256637, 1.256637});
    row({5}, 8, {2}, {}, {2}, {}, {-1.0071249, 0.3425266});
    row({5}, -8, {2}, {}, {-2}, {}, {-0.3425266, -2.263762});
    row({6}, -1, {1}, {1}, {-1, -19}, {}, {-2.9552611, -0.055354168, 0.78539816});
    row({6}, -5, {-1}, {1}, {3, 13}, {}, {-2.915033694, 1.5909100, -2.3561944});
    row({6}, 5, {1}, {-1}, {-3, -13}, {}, {2.9150336, -1.590910, 2.3561944});
    row({6}, 1, {-1}, {-1}, {1, 19}, {}, {2.9552611, 0.055354168, -0.78539816});
    row({7}, 6, {1}, {}, {-2}, {}, {-1.05169, 1.7936250, -0.3143315});
    row({7}, -6, {-1}, {}, {2}, {}, {1.0516925, -1.793625, 0.31433});
    row({8}, 1, {1}, {1}, {-5, -7}, {},
        {-0.87227636, 2.7042615, -2.9767963, 3.1415926});
    row({8}, 1, {1}, {-1}, {-5, 17}, {},
        {-2.9767963, -1.1334651, -0.87227635, 3.1415926});
    row({8}, -1, {-1}, {1}, {5, 7}, {},
        {0.87227636, -2.7042615, 2.9767963, 3.1415926});
    row({8}, -1, {-1}, {-1}, {5, -17}, {},
        {2.9767963, 1.1334651, 0.87227635, 3.1415926});
    row({8}, 7, {3}, {1}, {1, 11}, {},
        {2.4640490, -3.0755747, -0.49188699, 0.0});
    row({8}, 7, {3}, {-1}, {1, -13}, {},
        {-0.49188700, 1.5047784, 2.4640490, 0.0});
    row({8}, 17, {-3}, {1}, {-1, -11}, {},
        {-2.4640490, 3.0755747, 0.49188699, 0.0});
    row({8}, 17, {-3}, {-1}, {-1, 13}, {},
        {0.49188700, -1.5047784, -2.4640490, 0.0});
    row({2, 4}, 10, {1, 1}, {1, 1}, {}, {},
        {0.7853981, 1.77783, -2.497219, 1.570796, -0.7853981});
    row({2, 4}, -10, {1, 1}, {-1, 1}, {}, {},
        {-0.785398, 0.9924406, 1.42977, -1.57079, 0.7853981});
    row({2, 4}, -10, {1, 1}, {1, -1}, {}, {},
        {0.785398, 1.42977, -1.777838, -1.570796, -0.785398});
    row({2, 4}, 10, {1, 1}, {-1, -1}, {}, {},
        {-0.7853981, -2.497219, -0.9924406, 1.5707963, 0.7853981});
    row({9}, -8, {1}, {}, {-2}, {}, {-2.69568, 1.367012, 1.41882, -2.38374});
    row({9}, 8, {-1}, {}, {2}, {}, {2.695680, -1.3670127, -1.418824, 2.383744});
    row({3, 3}, 0, {1, -1}, {}, {2}, {},
        {2.9557793, -1.2330109, -2.2802084, 0.0});
    row({10}, -3, {1}, {1}, {}, {},
        {-2.3665026, -3.0894639, 3.077894, 0.00650245, 0.785398});
    row({10}, 9, {7}, {1}, {}, {},
        {1.7756309, -0.6115079, -1.030618, 2.8686859, -2.3561944});
    row({10}, 3, {1}, {-1}, {}, {},
        {-3.077894, 2.519776, -1.424024, 3.089463, -0.78539816});
    row({10}, -9, {7}, {-1}, {}, {},
        {-1.3447773, -2.868685, -1.7756309, 0.64512913, 2.3561944});
    row({11}, 14, {1}, {}, {2}, {},
        {1.9464713, 2.0140743, -1.7487929, 0.3352432, -0.1427077});
    row({11}, -2, {1}, {}, {1}, {},
        {0.53877136, -2.8317431, 0.2827610, 0.46457259, 2.5063157});
    row({11}, 2, {-1}, {}, {-1}, {},
        {-2.8884206, 2.3090448, 0.85395967, 2.1781685, -1.4920749});
    row({11}, 10, {-1}, {}, {-2}, {},
        {-1.4807206, 0.87167704, -1.1775942, 2.0488391, 2.1420869});
    row({12}, 7, {1}, {1}, {}, {},
        {3.0822445, -0.3494640, -3.0450322, -0.7241984, -0.38234715, 1.570796});
    row({12}, -5, {1}, {-1}, {}, {},
        {-0.6247574, -3.044463, -2.3415376, 0.4718634, 0.99777419, 1.5707963});
    row({12}, -7, {-1}, {1}, {}, {},
        {-3.0822445, 0.34946402, 3.0450322, 0.7241984, 0.3823471, -1.570796});
    row({12}, 5, {-1}, {-1}, {}, {},
        {0.6247574, 3.0444636, 2.3415376, -0.47186343, -0.99777419, -1.5707963});
    row({2, 6}, -8, {1, -1}, {1, 1}, {}, {},
        {-2.35619, 0.0611997, 2.469129, 0.89833, -1.88433, 0.785398, 1.57079});
    row({2, 6}, 8, {1, 1}, {-1, 1}, {}, {},
        {2.356194, -0.0611997, -2.4691295, -0.8983332, 1.884331, -0.785398, -1.570796});
    row({13}, 12, {1}, {}, {3}, {},
        {-2.4521656, 1.9847836, 0.42579608, 1.4322079, -1.4550587, 1.1404478});
    row({13}, 12, {1}, {}, {3}, {},
        {1.4550587, 1.3924399, -1.9847836, -1.2761619, 0.44776608, -1.4322079});
    row({13}, 0, {2}, {}, {1}, {},
        {-2.4805730, 3.0305492, 0.28372451, -0.04125417, 0.44928247, 2.9410534});
    row({13}, 0, {2}, {}, {1}, {},
        {-0.44928247, 2.2170122, -3.0305492, -1.892166, -2.9638949, 0.041254182});
    return t;
}

} // namespace

const std::vector<SeedRow>& seed_table() {
    static const std::vector<SeedRow> table = build_table();
    return table;
}

std::vector<SeedRow> seed_rows_for(const std::vector<long>& factors) {
    const char* env = std::getenv("NEARGROUP_DATA");
    std::vector<SeedRow> src = env ? load_seed_table(env) : seed_table();
    std::vector<SeedRow> out;
    for (const auto& r : src)
        if (r.group_factors == factors) out.push_back(r);
    return out;
}

std::vector<SeedRow> load_seed_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("seed table: cannot open " + path);
    nlohmann::json j;
    in >> j;
    std::vector<SeedRow> out;
    for (const auto& e : j.at("rows")) {
        SeedRow r;
        r.group_factors = e.at("group").get<std::vector<long>>();
        r.c_exp24 = e.at("c_exp24").get<long>();
        r.pairing_ms = e.at("m").get<std::vector<long>>();
        if (e.contains("a_signs")) r.a_signs = e.at("a_signs").get<std::vector<int>>();
        if (e.contains("qprime")) r.qprime = e.at("qprime").get<std::vector<long>>();
        if (e.contains("qprime_group"))
            r.qprime_group = e.at("qprime_group").get<std::vector<long>>();
        r.j = e.at("j").get<std::vector<double>>();
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<long> j_index_order(const std::vector<long>& factors) {
    AbelianGroup G(factors);
    std::vector<long> order;
    std::vector<char> used(G.order, 0);
    used[0] = 1;
    if (G.rank() == 1) {
        for (long g = 1; g <= G.factors[0] / 2; ++g) order.push_back(g);
        return order;
    }
    // (g',0) for g'=1..floor(n1/2), then per g''=1.. one rep per {+-} orbit
    long n1 = factors[0], n2 = factors[1];
    for (long a = 1; a <= n1 / 2; ++a) order.push_back(G.index({a, 0}));
    for (long b = 1; b <= n2 / 2; ++b)
        for (long a = 0; a < n1; ++a) {
            long idx = G.index({a, b});
            if (used[idx]) continue;
            order.push_back(idx);
            used[idx] = 1;
            used[G.neg(idx)] = 1;
        }
    return order;
}

} // namespace ng
