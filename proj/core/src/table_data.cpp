#include "etaq/table.hpp"

namespace etaq {
namespace {

// Columns: level, exponent string, m_r, k, delta, squarefree part of Pi.
constexpr std::string_view kTable = R"tsv(N	r	m_r	k	delta	Pi_sf
2	1^{4}2^{-2}	4	1	0	1
2	1^{8}2^{-4}	2	2	0	1
2	1^{12}2^{-6}	4	3	0	1
3	1^{3}3^{-1}	3	1	1	3
3	1^{6}3^{-2}	3	2	0	1
4	1^{-4}2^{10}4^{-4}	1	1	0	1
4	1^{-2}2^{7}4^{-3}	8	1	0	2
4	1^{0}2^{4}4^{-2}	4	1	0	1
4	1^{2}2^{1}4^{-1}	8	1	0	2
4	1^{-6}2^{17}4^{-7}	8	2	0	2
4	1^{-4}2^{14}4^{-6}	4	2	0	1
4	1^{-2}2^{11}4^{-5}	8	2	0	2
4	1^{0}2^{8}4^{-4}	2	2	0	1
4	1^{2}2^{5}4^{-3}	8	2	0	2
4	1^{4}2^{2}4^{-2}	4	2	0	1
4	1^{6}2^{-1}4^{-1}	8	2	0	2
4	1^{-2}2^{15}4^{-7}	8	3	0	2
4	1^{0}2^{12}4^{-6}	4	3	0	1
4	1^{2}2^{9}4^{-5}	8	3	0	2
6	1^{-2}2^{4}3^{2}6^{-2}	12	1	0	1
6	1^{-1}2^{2}3^{3}6^{-2}	6	1	1	3
6	1^{0}2^{0}3^{4}6^{-2}	4	1	0	1
6	1^{0}2^{3}3^{0}6^{-1}	3	1	1	3
6	1^{1}2^{1}3^{1}6^{-1}	12	1	0	1
6	1^{2}2^{-1}3^{2}6^{-1}	2	1	1	3
6	1^{0}2^{3}3^{4}6^{-3}	12	2	1	3
6	1^{2}2^{2}3^{2}6^{-2}	6	2	0	1
6	1^{3}2^{0}3^{3}6^{-2}	12	2	1	3
8	1^{-2}2^{3}4^{3}8^{-2}	1	1	0	2
8	1^{-2}2^{5}4^{0}8^{-1}	8	1	0	1
8	1^{0}2^{-2}4^{7}8^{-3}	8	1	0	2
8	1^{0}2^{0}4^{4}8^{-2}	4	1	0	1
8	1^{0}2^{2}4^{1}8^{-1}	8	1	0	2
8	1^{2}2^{-3}4^{5}8^{-2}	2	1	0	2
8	1^{2}2^{-1}4^{2}8^{-1}	8	1	0	1
8	1^{-2}2^{5}4^{4}8^{-3}	8	2	0	1
8	1^{0}2^{2}4^{5}8^{-3}	8	2	0	2
8	1^{0}2^{4}4^{2}8^{-2}	4	2	0	1
8	1^{0}2^{6}4^{-1}8^{-1}	8	2	0	2
8	1^{2}2^{-1}4^{6}8^{-3}	8	2	0	1
9	1^{0}3^{3}9^{-1}	3	1	1	3
9	1^{0}3^{6}9^{-2}	3	2	0	1
10	1^{2}2^{-1}5^{2}10^{-1}	4	1	0	5
12	1^{-2}2^{4}3^{0}4^{0}6^{1}12^{-1}	24	1	0	2
12	1^{-2}2^{5}3^{0}4^{-2}6^{2}12^{-1}	8	1	1	6
12	1^{-2}2^{5}3^{2}4^{-2}6^{-1}12^{0}	4	1	1	3
12	1^{-1}2^{2}3^{-1}4^{0}6^{4}12^{-2}	12	1	1	3
12	1^{-1}2^{2}3^{1}4^{0}6^{1}12^{-1}	24	1	1	6
12	1^{-1}2^{4}3^{-1}4^{-1}6^{2}12^{-1}	3	1	0	1
12	1^{-1}2^{4}3^{1}4^{-1}6^{-1}12^{0}	24	1	0	2
12	1^{0}2^{-1}3^{-2}4^{2}6^{6}12^{-3}	24	1	1	6
12	1^{0}2^{-1}3^{0}4^{2}6^{3}12^{-2}	6	1	1	3
12	1^{0}2^{-1}3^{2}4^{2}6^{0}12^{-1}	24	1	1	6
12	1^{0}2^{0}3^{0}4^{0}6^{4}12^{-2}	4	1	0	1
12	1^{0}2^{1}3^{0}4^{1}6^{1}12^{-1}	12	1	0	1
12	1^{0}2^{2}3^{-2}4^{-1}6^{5}12^{-2}	8	1	1	6
12	1^{0}2^{2}3^{0}4^{-1}6^{2}12^{-1}	2	1	1	3
12	1^{0}2^{2}3^{2}4^{-1}6^{-1}12^{0}	8	1	1	6
12	1^{1}2^{-1}3^{-1}4^{1}6^{4}12^{-2}	24	1	1	6
12	1^{1}2^{-1}3^{1}4^{1}6^{1}12^{-1}	12	1	1	3
12	1^{1}2^{1}3^{-1}4^{0}6^{2}12^{-1}	24	1	0	2
12	1^{2}2^{-2}3^{-2}4^{2}6^{4}12^{-2}	3	1	0	1
12	1^{2}2^{-2}3^{0}4^{2}6^{1}12^{-1}	24	1	0	2
12	1^{2}2^{-1}3^{-2}4^{0}6^{5}12^{-2}	4	1	1	3
12	1^{2}2^{-1}3^{0}4^{0}6^{2}12^{-1}	8	1	1	6
12	1^{0}2^{3}3^{0}4^{0}6^{3}12^{-2}	12	2	1	3
14	1^{0}2^{0}7^{4}14^{-2}	4	1	0	1
15	1^{0}3^{0}5^{3}15^{-1}	3	1	1	3
16	1^{0}2^{-2}4^{5}8^{0}16^{-1}	8	1	0	1
16	1^{0}2^{0}4^{2}8^{1}16^{-1}	8	1	0	2
16	1^{0}2^{2}4^{-1}8^{2}16^{-1}	8	1	0	1
16	1^{0}2^{0}4^{6}8^{-1}16^{-1}	8	2	0	2
18	1^{0}2^{0}3^{-2}6^{4}9^{2}18^{-2}	12	1	0	1
18	1^{0}2^{0}3^{0}6^{3}9^{0}18^{-1}	3	1	1	3
18	1^{0}2^{0}3^{1}6^{1}9^{1}18^{-1}	12	1	0	1
20	1^{-2}2^{5}4^{-2}5^{0}10^{2}20^{-1}	8	1	0	10
20	1^{0}2^{0}4^{0}5^{-2}10^{7}20^{-3}	8	1	0	2
20	1^{0}2^{0}4^{0}5^{2}10^{1}20^{-1}	8	1	0	2
20	1^{0}2^{2}4^{-1}5^{-2}10^{5}20^{-2}	8	1	0	10
20	1^{0}2^{2}4^{-1}5^{2}10^{-1}20^{0}	8	1	0	10
20	1^{2}2^{-1}4^{0}5^{0}10^{2}20^{-1}	8	1	0	10
32	1^{0}2^{0}4^{0}8^{2}16^{1}32^{-1}	8	1	0	2
32	1^{0}2^{0}4^{2}8^{-1}16^{2}32^{-1}	8	1	0	1
)tsv";

}  // namespace

std::string_view table_tsv() { return kTable; }

}  // namespace etaq
