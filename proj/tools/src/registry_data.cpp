#include "bmn_app/registry.hpp"

namespace bmn::app {

// Published data, copied verbatim.

const std::vector<RecordText>& recordTexts() {
    static const std::vector<RecordText> data{
        {"Manasse", "Mark Manasse", "1992", 713, 5104, "Q--J----K--K-J---Q---A---A", "---K-K--JA-QA--J-----Q----"},
        {"Kleber-A", "Michael Kleber", "before 1999", 805, 5791, "---JQ---K-A----A-J-K---QK-", "-J-----------AJQA----K---Q"},
        {"Kleber-B", "Michael Kleber", "c. 2002", 841, 5977, "----QJ-A-KK--------K--QQJ-", "---J---K--A-----Q-AJ-A----"},
        {"Kleber-C", "Michael Kleber", "c. 2005", 893, 6321, "-J--KA----A-Q--Q-A----KJ--", "A------QKJ--Q-------KJ----"},
        {"Collins", "Truman Collins", "2006", 960, 6914, "A-QK------Q----KA-----J---", "-JAK----A--Q----J---QJ--K-"},
        {"Mann-Wu", "Richard Mann & Nicolas Wu", "16-07-2007", 1007, 7157, "K-KK----K-A-----JAA--Q--J-", "---Q---Q-J-----J------AQ--"},
        {"Nessler-A", "Reed Nessler", "01-05-2012", 1015, 7207, "----Q------A--K--A-A--QJK-", "-Q--J--J---QK---K----JA---"},
        {"Nessler-B", "Reed Nessler", "04-05-2012", 1016, 7224, "-J-------Q------A--A--QKK-", "-A-Q--J--J---Q--AJ-K---K--"},
        {"Wu", "Nicolas Wu", "17-05-2012", 1016, 7225, "--A-Q--J--J---Q--AJ-K---K-", "-J-------Q------A--A--QKK-"},
        {"Nessler-C", "Reed Nessler", "20-09-2013", 1014, 7259, "---AK-Q--J----J--QKJ-Q----", "------JK-----A--K--Q---AA-"},
        {"Rucklidge-A", "William Rucklidge", "17-01-2014", 1024, 7269, "A-AQ-----Q--K--AQ-------JJ", "-J-A-KKJ--K-----------Q---"},
        {"Anderson", "Philip Anderson", "03-02-2014", 1032, 7323, "-AJ--QK--K----Q--J-A-KKJ--", "---------JQ----------A-AQ-"},
        {"Rucklidge-B", "William Rucklidge", "05-03-2014", 1122, 7960, "-J------Q------AAA-----QQ-", "K----JA-----------KQ-K-JJK"},
        {"Nessler-D", "Reed Nessler", "31-08-2021", 1106, 7972, "----K---A--Q-A--JJA------J", "-----KK---------A-JK-Q-Q-Q"},
        {"Nessler-E", "Reed Nessler", "09-06-2022", 1164, 8344, "---AJ--Q---------QAKQJJ-QK", "-----A----KJ-K--------A---"},
    };
    return data;
}

const std::vector<StateText>& predecessorTexts() {
    static const std::vector<StateText> data{
        {"--------------------J--Q-Q-Q-Q-K-KJ--K-K-A-A-A-AJ-", "J-", 1},
        {"J--------------------J--Q-Q-Q-Q-K-KJ--K-K-A-A-A-A", "-J-", 1},
        {"J--------------------J--Q-Q-Q-Q-K-KJ--K-K-A-A-A-", "A-J-", 2},
        {"-J--------------------J--Q-Q-Q-Q-K-KJ--K-K-A-A-A", "A-J-", 1},
        {"AJ--------------------J--Q-Q-Q-Q-K-KJ--K-K-A-A-", "-A-J-", 1},
        {"-AJ--------------------J--Q-Q-Q-Q-K-KJ--K-K-A-", "A-A-J-", 2},
        {"--AJ--------------------J--Q-Q-Q-Q-K-KJ--K-K-A", "A-A-J-", 1},
        {"A-AJ--------------------J--Q-Q-Q-Q-K-KJ--K-K-", "-A-A-J-", 1},
        {"A-AJ--------------------J--Q-Q-Q-Q-K-KJ--K-K", "--A-A-J-", 2},
        {"-A-AJ--------------------J--Q-Q-Q-Q-K-KJ--K-", "K-A-A-J-", 2},
        {"--A-AJ--------------------J--Q-Q-Q-Q-K-KJ--K", "K-A-A-J-", 1},
        {"K-A-AJ--------------------J--Q-Q-Q-Q-K-KJ--", "-K-A-A-J-", 1},
        {"K-A-AJ--------------------J--Q-Q-Q-Q-K-KJ-", "--K-A-A-J-", 2},
        {"-K-A-AJ--------------------J--Q-Q-Q-Q-K-KJ", "--K-A-A-J-", 1},
    };
    return data;
}

const std::vector<std::string>& pieceTexts() {
    static const std::vector<std::string> data{
        "--",
        "--Q-Q",
        "-----K",
        "--------",
        "--K---Q-KQQ",
        "--Q-Q-Q-Q-K-K",
        "--K---A----AA",
        "--------A-KAA",
        "--A-----A-A--A",
        "--A----Q----QQ",
        "--------A----AA",
        "--Q----Q----Q-Q",
        "--Q--Q-Q-QQ-Q-Q",
        "--------Q-Q-Q-Q",
        "--------Q----Q-Q",
        "--K-A--Q-K--Q--QQ",
        "--Q----A-Q-A-A---",
        "--------------K---",
        "--------Q----Q----",
        "-----------------Q-",
        "--------------------",
        "--------K----KQQ-KQQ",
        "--------K----KK--Q-K--Q--QQ",
        "--------K---------Q-Q-K---Q-KKQ",
        "--------------------A----------A---A",
        "--------------------Q----------Q----Q-Q",
    };
    return data;
}

const std::vector<StateText>& constructionTexts() {
    static const std::vector<StateText> data{
        {"--------------------J--Q-Q-Q-Q-K-KJ--K-K-A-A-A-AJ-", "J-", 1},
        {"-----------------KJ--Q-K-A-K-Q-KJ--Q----A-Q-A-A-J-", "J-", 1},
        {"-----------------KJ--A-A-Q-A-A---Q-J--K---Q-KQK-J-", "J-", 1},
        {"--------Q----Q-Q-J--------A----AA---J--K-KQ-KK-AJ-", "J-", 1},
        {"--Q----Q----Q-Q-J--K---K-KAK--J--------A----AA--J-", "J-", 1},
        {"-----------------Q-J--K---Q-KQQJ--K-K--A-A-A--A-J-", "J-", 1},
        {"--------J--Q----A-Q-A-A-J--------K----KQ-Q-K-K-AJ-", "J-", 1},
        {"-----A--J--Q----Q----Q-QJ--------K----KA--A-KK-AJ-", "J-", 1},
        {"--------Q-------Q-J--Q-Q-K-K-AKJ--K---A----AA---J-", "J-", 1},
        {"--------Q-------Q-J--Q-Q-K-K-K-KJ--A-----A-A--A-J-", "J-", 1},
        {"--Q----Q----Q-Q-J-----KJ--------K----KA-A-K-A--AJ-", "J-", 1},
        {"--A-Q-K-K-K-KJ--Q----A-Q-A-AJ--------------Q----J-", "J-", 1},
        {"--------------Q----J--K---Q-KQKJ--A-A-K-A-A---Q-J-", "J-", 1},
        {"--K---A----AA---J--J--------K----KA--Q-K--Q--QQ-J-", "J-", 1},
        {"--A-A--J--A-A---J--------K---------Q-Q-K---Q-KKQJ-", "J-", 1},
        {"--K---A----AAJ--J--------K---------Q-Q-K---Q-KAQJ-", "J-", 1},
    };
    return data;
}

const std::vector<StateText>& cycleTexts() {
    static const std::vector<StateText> data{
        {"--K---A----AAJ--J--------K---------Q-Q-K---Q-KAQJ-", "J-", 1},
        {"K---A----AAJ--J--------K---------Q-Q-K---Q-KAQJ-", "--J-", 2},
        {"--A----AAJ--J--------K---------Q-Q-K---Q-KAQJ-", "--K-J-", 2},
        {"---AAJ--J--------K---------Q-Q-K---Q-KAQJ-", "-----KA-J-", 2},
        {"--J--------K---------Q-Q-K---Q-KAQJ--------A-KAAJ-", "J-", 1},
        {"J--------K---------Q-Q-K---Q-KAQJ--------A-KAAJ-", "--J-", 2},
        {"--------K---------Q-Q-K---Q-KAQJ--------A-KAAJ--J-", "J-", 1},
        {"------K---------Q-Q-K---Q-KAQJ--------A-KAAJ--J-", "--J-", 2},
        {"---K---------Q-Q-K---Q-KAQJ--------A-KAAJ--J-", "-----J-", 2},
        {"--------Q-Q-K---Q-KAQJ--------A-KAAJ--J-", "--------K-J-", 2},
        {"Q-K---Q-KAQJ--------A-KAAJ--J-", "-----------------KQ-J-", 2},
        {"-K---Q-KAQJ--------A-KAAJ--J--Q--", "--------------KQ-J-", 1},
        {"---Q-KAQJ--------A-KAAJ--J--Q----K---", "----------KQ-J-", 1},
        {"-KAQJ--------A-KAAJ--J--Q----K---------Q--", "-----KQ-J-", 1},
        {"AQJ--------A-KAAJ--J--Q----K---------Q----K---", "-KQ-J-", 1},
        {"--------A-KAAJ--J--Q----K---------Q----K---A-KQQJ-", "J-", 1},
        {"------A-KAAJ--J--Q----K---------Q----K---A-KQQJ-", "--J-", 2},
        {"---A-KAAJ--J--Q----K---------Q----K---A-KQQJ-", "-----J-", 2},
        {"KAAJ--J--Q----K---------Q----K---A-KQQJ-", "--------A-J-", 2},
        {"AAJ--J--Q----K---------Q----K---A-KQQJ--K---", "----A-J-", 1},
        {"AJ--J--Q----K---------Q----K---A-KQQJ--K---A----", "A-J-", 1},
        {"--J--Q----K---------Q----K---A-KQQJ--K---A----AAJ-", "J-", 1},
        {"J--Q----K---------Q----K---A-KQQJ--K---A----AAJ-", "--J-", 2},
        {"--Q----K---------Q----K---A-KQQJ--K---A----AAJ--J-", "J-", 1},
        {"Q----K---------Q----K---A-KQQJ--K---A----AAJ--J-", "--J-", 2},
        {"---K---------Q----K---A-KQQJ--K---A----AAJ--J-", "--Q-J-", 2},
        {"--------Q----K---A-KQQJ--K---A----AAJ--J-", "-----Q-K-J-", 2},
        {"-Q----K---A-KQQJ--K---A----AAJ--J-", "-K-J-----------Q--", 2},
        {"---K---A-KQQJ--K---A----AAJ--J-", "-----------Q----KQ-J-", 2},
        {"---A-KQQJ--K---A----AAJ--J--------K---", "----Q----KQ-J-", 1},
        {"QQJ--K---A----AAJ--J--------K---------A-Q-K---", "-KQ-J-", 1},
        {"--K---A----AAJ--J--------K---------A-Q-K---Q-KQQJ-", "J-", 1},
        {"K---A----AAJ--J--------K---------A-Q-K---Q-KQQJ-", "--J-", 2},
        {"--A----AAJ--J--------K---------A-Q-K---Q-KQQJ-", "--K-J-", 2},
        {"---AAJ--J--------K---------A-Q-K---Q-KQQJ-", "-----KA-J-", 2},
        {"--J--------K---------A-Q-K---Q-KQQJ--------A-KAAJ-", "J-", 1},
        {"J--------K---------A-Q-K---Q-KQQJ--------A-KAAJ-", "--J-", 2},
        {"--------K---------A-Q-K---Q-KQQJ--------A-KAAJ--J-", "J-", 1},
        {"------K---------A-Q-K---Q-KQQJ--------A-KAAJ--J-", "--J-", 2},
        {"---K---------A-Q-K---Q-KQQJ--------A-KAAJ--J-", "-----J-", 2},
        {"--------A-Q-K---Q-KQQJ--------A-KAAJ--J-", "--------K-J-", 2},
        {"Q-K---Q-KQQJ--------A-KAAJ--J-", "-----------------KA-J-", 2},
        {"-K---Q-KQQJ--------A-KAAJ--J--Q--", "--------------KA-J-", 1},
        {"---Q-KQQJ--------A-KAAJ--J--Q----K---", "----------KA-J-", 1},
        {"-KQQJ--------A-KAAJ--J--Q----K---------Q--", "-----KA-J-", 1},
        {"QQJ--------A-KAAJ--J--Q----K---------Q----K---", "-KA-J-", 1},
        {"--------A-KAAJ--J--Q----K---------Q----K---Q-KQAJ-", "J-", 1},
        {"------A-KAAJ--J--Q----K---------Q----K---Q-KQAJ-", "--J-", 2},
        {"---A-KAAJ--J--Q----K---------Q----K---Q-KQAJ-", "-----J-", 2},
        {"KAAJ--J--Q----K---------Q----K---Q-KQAJ-", "--------A-J-", 2},
        {"AAJ--J--Q----K---------Q----K---Q-KQAJ--K---", "----A-J-", 1},
        {"AJ--J--Q----K---------Q----K---Q-KQAJ--K---A----", "A-J-", 1},
        {"--J--Q----K---------Q----K---Q-KQAJ--K---A----AAJ-", "J-", 1},
        {"J--Q----K---------Q----K---Q-KQAJ--K---A----AAJ-", "--J-", 2},
        {"--Q----K---------Q----K---Q-KQAJ--K---A----AAJ--J-", "J-", 1},
        {"Q----K---------Q----K---Q-KQAJ--K---A----AAJ--J-", "--J-", 2},
        {"---K---------Q----K---Q-KQAJ--K---A----AAJ--J-", "--Q-J-", 2},
        {"--------Q----K---Q-KQAJ--K---A----AAJ--J-", "-----Q-K-J-", 2},
        {"-Q----K---Q-KQAJ--K---A----AAJ--J-", "-K-J-----------Q--", 2},
        {"---K---Q-KQAJ--K---A----AAJ--J-", "-----------Q----KQ-J-", 2},
        {"---Q-KQAJ--K---A----AAJ--J--------K---", "----Q----KQ-J-", 1},
        {"QAJ--K---A----AAJ--J--------K---------Q-Q-K---", "-KQ-J-", 1},
    };
    return data;
}

}  // namespace bmn::app
