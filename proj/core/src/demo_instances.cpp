#include "tropattack/demo_instances.hpp"

namespace tropattack {

namespace {

TropMatrix mat(std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<std::vector<TropScalar>> data;
    for (const auto& row : rows) {
        data.emplace_back(row.begin(), row.end());
    }
    return TropMatrix::from_rows(data);
}

}  // namespace

DemoInstance demo_easy_instance() {
    DemoInstance inst;
    inst.m = mat({{8, 7, 2}, {10, 3, 6}, {-10, -1, 3}});
    inst.h = mat({{0, -3, -5}, {-1, -2, 2}, {1, -3, -4}});
    inst.m_exp = 5;
    inst.n_exp = 8;
    inst.expected_a = mat({{10, 7, 9}, {10, 7, 9}, {4, 1, 3}});
    inst.expected_b = inst.expected_a;
    inst.expected_key = inst.expected_a;
    return inst;
}

DemoInstance demo_disclog_instance() {
    DemoInstance inst;
    inst.m = mat({{-75, -45, -69, 60},
                  {83, 52, 95, -72},
                  {27, 92, 92, -16},
                  {87, 93, -3, 84}});
    inst.h = mat({{1, 7, 2, 5},
                  {-1, -2, 2, 4},
                  {3, 4, 2, 2},
                  {-5, -10, 10, 0}});
    inst.m_exp = 15;
    inst.n_exp = 16;
    inst.expected_a = mat({{145, 146, 148, 144},
                           {176, 177, 179, 175},
                           {175, 176, 178, 174},
                           {176, 177, 179, 175}});
    inst.expected_b = mat({{151, 152, 154, 150},
                           {182, 183, 185, 181},
                           {181, 182, 184, 180},
                           {182, 183, 185, 181}});
    inst.expected_key = mat({{241, 242, 244, 240},
                             {272, 273, 275, 271},
                             {271, 272, 274, 270},
                             {272, 273, 275, 271}});
    return inst;
}

DemoDisclogData demo_disclog_data() {
    DemoDisclogData data;
    data.f = mat({{1, 7, 2, 5},
                  {-1, 0, 2, 4},
                  {3, 4, 2, 2},
                  {-5, -10, 10, 0}});
    data.v = mat({{55, 50, 70, 60},
                  {98, 99, 97, 97},
                  {95, 96, 94, 96},
                  {92, 94, 95, 97}});
    data.c = mat({{0, 1, 3, -1},
                  {-1, 0, 2, -2},
                  {-3, -2, 0, -4},
                  {1, 2, 4, 0}});
    const TropScalar ni = TropScalar::neg_inf();
    data.s = TropMatrix::from_rows({{ni, TropScalar(1), ni, ni},
                                    {ni, ni, ni, TropScalar(-2)},
                                    {TropScalar(-3), ni, ni, ni},
                                    {ni, ni, TropScalar(4), ni}});
    data.csr_product = mat({{0, 1, 3, -1},
                            {-1, 0, 2, -2},
                            {-3, -2, 0, -4},
                            {1, 2, 4, 0}});
    data.cycle = {0, 1, 3, 2};
    data.mu = 78;
    data.t = 13;
    data.lambda = 6;
    return data;
}

}  // namespace tropattack
