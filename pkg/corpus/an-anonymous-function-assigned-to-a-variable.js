var sum = function (a, b){
    return a + b;
}

sum(3, 4); // answers 7
